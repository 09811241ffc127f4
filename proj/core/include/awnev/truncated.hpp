#pragma once

#include <vector>

#include "awnev/counting.hpp"
#include "awnev/operators.hpp"
#include "awnev/roots.hpp"
#include "awnev/xpoly.hpp"

namespace awnev {
namespace nev {

// Parity offset used by the truncated counting definition: -1 when M is
// odd, 0 when M is even.
inline int delta_of(int M) { return M % 2 != 0 ? -1 : 0; }

// Classical truncation: sum over the supplied points of min{order, M}.
// The points are exact x-plane locations known at construction time.
int trunc_classical(const XPoly& f, const Rat& a, int M, const std::vector<GaussRat>& xs);

// Minimum vanishing order of the mixed operators A_{q^{M-t}} D_q^t f over
// t = 0..M, computed from the definition. M must stay small (the iterated
// divided differences grow quickly); see shifted_min_order for large M.
int mixed_min_order(const RatFunc& f, int M, const GaussRat& z0, const AwContext& ctx);

// min over t = 0..M of the vanishing order of eta_q^{M-2t} f at z0, i.e.
// the order of f at s^{M-2t} z0. The scan exits as soon as one shift misses
// every zero, which is guaranteed for M+1 beyond the zero count of f; this
// is what makes astronomically large truncation levels computable for
// rational data.
int shifted_min_order(const RatFunc& f, long long M, const GaussRat& z0,
                      const AwContext& ctx);

// Truncated-by-M count over exact query points (z-model):
//   sum ( order of eta^{delta(M)}(f - a)  -  min_t order of A_{q^{M-t}} D_q^t (f - a) ).
// Points must satisfy |z| > guard_radius(M) (GuardViolation otherwise).
// use_shift_form routes the min through shifted_min_order, the route that
// scales to large M.
int trunc_aw_M(const RatFunc& f, const Rat& a, int M, const std::vector<GaussRat>& zs,
               const AwContext& ctx, bool use_shift_form = false);

// Counting variant with the first-order difference credit:
//   value:        sum ( nu(f-a) - min{ nu(f-a), nu(eta_q D_q (f-a)) } )
//   eta2_variant: sum ( nu(f-a) - min{ nu(f-a), nu(eta_q^2 (f-a)) } )
// The two agree up to a bounded discrepancy on any fixed family.
struct CfCount {
    int value;
    int eta2_variant;
};
CfCount trunc_aw_cf(const RatFunc& f, const Rat& a, const std::vector<GaussRat>& zs,
                    const AwContext& ctx);

// Order identity: min_t nu(A_{q^{M-t}} D_q^t f) == min_t nu(eta_q^{M-2t} f)
// at every query point, both sides exact.
bool verify_lemma53(const RatFunc& f, int M, const std::vector<GaussRat>& zs,
                    const AwContext& ctx);

// Superadditivity of the minimal mixed-operator order over products, plus
// the classical two-sided derivative chain
//   min_{t<=M} nu(f^{(t)}) >= sum_i min_{t<=M} nu(f_i^{(t)}) >= min_{t<=mM} nu(f^{(t)})
// for the same factors, checked exactly at the x-images of the query points.
bool verify_order_superadditivity(const std::vector<XPoly>& factors, int M,
                                  const std::vector<GaussRat>& zs, const AwContext& ctx);

// x-image (z + 1/z)/2 of a z-model point.
GaussRat x_of_z(const GaussRat& z);

// Integrated counting function from exact per-point counts: the same closed
// form as counting_N with the truncated count as multiplicity.
double integrated_from_points(const std::vector<std::pair<GaussRat, int>>& z_counts, double r);

}  // namespace nev
}  // namespace awnev
