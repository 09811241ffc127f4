#pragma once

#include "awnev/ratfunc.hpp"

namespace awnev {

// Session-wide operator context: q = s^2 with s rational in (0, 1), so the
// whole shift calculus stays exact. guard_radius(n) = s^{-n} is the |z|
// threshold below which numeric evaluation of n-fold shifts is refused.
struct AwContext {
    Rat s;

    explicit AwContext(Rat s_half);

    Rat q() const { return s * s; }
    Rat guard_radius_exact(int n) const { return rat_pow(s, -n); }
    double guard_radius(int n) const { return to_double(guard_radius_exact(n)); }
};

namespace ops {

// eta_q^k: z -> s^k z on the z-model. shift(shift(f, a), b) == shift(f, a+b)
// holds identically in this representation.
RatFunc shift(const RatFunc& f, long long k, const AwContext& ctx);

// (eta_q x - eta_q^{-1} x) = (s - 1/s)(z - 1/z)/2 as a rational function.
RatFunc dq_denominator(const AwContext& ctx);

// Askey-Wilson divided difference: (shift(f,1) - shift(f,-1)) / dq_denominator.
RatFunc aw_diff(const RatFunc& f, const AwContext& ctx);
RatFunc aw_diff_iter(const RatFunc& f, int t, const AwContext& ctx);

// Averaging over the +/- n shifts; n >= 1. aw_avg(f, 0) is the identity.
RatFunc aw_avg(const RatFunc& f, int n, const AwContext& ctx);

// A_{q^{M-t}} D_q^t f with A_{q^0} and D_q^0 the identity; 0 <= t <= M.
RatFunc mixed(const RatFunc& f, int M, int t, const AwContext& ctx);

// D_q(fg) == A_q(f) D_q(g) + A_q(g) D_q(f), as exact equality of reduced
// rational functions.
bool verify_product_rule(const RatFunc& f, const RatFunc& g, const AwContext& ctx);

// D_q(f/g) == (A_q(g) D_q(f) - A_q(f) D_q(g)) / (shift(g,1) shift(g,-1));
// throws ZeroDenominatorError when g == 0.
bool verify_quotient_rule(const RatFunc& f, const RatFunc& g, const AwContext& ctx);

}  // namespace ops

}  // namespace awnev
