#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awnev/rational.hpp"

namespace awnev {
namespace smt {

// Closed rational interval; the arithmetic here is the minimum needed to
// certify floors and upper bounds involving Euler's number.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval(Rat l, Rat h);
    static RatInterval point(const Rat& v) { return {v, v}; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    // Both operands nonnegative (all quantities here are).
    RatInterval mul_nonneg(const RatInterval& o) const;
    RatInterval pow_nonneg(int e) const;
};

// Euler's number enclosed to 50 decimal digits.
RatInterval euler_e();

// floor of every point in the interval; CertificationError when the
// enclosure straddles an integer.
Int floor_certified(const RatInterval& iv);

// Quantitative bundle of the hypersurface second main theorem: the degree
// data, the decomposition-quality ratios alpha and beta, and the filtration
// integers N, M, M1, Omega together with their certified inequalities.
struct SmtParams {
    int n = 0;
    int l = 0;
    int p = 0;
    int s_prime = 1;
    std::vector<int> dj;
    std::vector<int> sj;
    Int d = 1;     // lcm of the d_j
    Int dhat = 1;  // common multiple of the decomposition degrees and d
    Rat alpha;
    Rat beta;
    Rat eps;
    Int N;
    Int M;
    Int M1;
    Int Omega;

    bool hypothesis_ok = false;       // beta (alpha + 1) >= alpha
    bool nm_certificate = false;      // N M / (dhat Omega) <= (n+1) + eps/(alpha+1), exact
    bool m_bound_certificate = false; // M <= 4 (e ceil(alpha+1) (n+1)^2 d! ceil(1/eps))^n

    std::string summary() const;
};

// Core calculator from the raw quantities. d defaults to dhat; beta
// defaults to 1 (the value it takes in every configuration where the
// (l - n) weighting disappears).
SmtParams compute_certificates(int n, const Int& dhat, const Rat& alpha, const Rat& eps,
                               std::optional<Int> d = std::nullopt,
                               std::optional<Rat> beta = std::nullopt);

// Full parameter bundle from the hypersurface data: degrees d_j, distinct
// irreducible factor counts s_j, the decomposition arity s', and the
// ambient/position dimensions. When dhat_override is absent, dhat is taken
// as lcm{1..d}, a certified common multiple of every admissible
// decomposition degree (and <= d!).
SmtParams compute_smt_params(int n, int l, const std::vector<int>& dj,
                             const std::vector<int>& sj, int s_prime, const Rat& eps,
                             std::optional<Int> dhat_override = std::nullopt);

// (1 + y)^n <= 1 + (n+1) y on a rational grid in [0, 1/(n(n+1))]; exact.
bool verify_binomial_bound(int n, int grid_points);

}  // namespace smt
}  // namespace awnev
