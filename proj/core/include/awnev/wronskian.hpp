#pragma once

#include <vector>

#include "awnev/operators.hpp"
#include "awnev/xpoly.hpp"

namespace awnev {

// Tuple of rational functions sharing one operator context; entry count n+1.
struct FunctionTuple {
    std::vector<RatFunc> entries;
    AwContext ctx;

    FunctionTuple(std::vector<RatFunc> fs, AwContext c);
    int order() const { return static_cast<int>(entries.size()) - 1; }  // n
};

namespace wron {

// Exact determinant; cofactor expansion up to 4x4, fraction-free elimination
// with row pivoting beyond that.
RatFunc determinant(std::vector<std::vector<RatFunc>> m);

// Determinant with rows A_{q^{n-i}} D_q^i f_j, i = 0..n (last row D_q^n).
RatFunc wronskian(const FunctionTuple& fs);

// Equivalent form for the algebraic model: determinant of the shift matrix
// (rows eta_q^{n-2k} f_j, k = 0..n) times the product over 1<=j<=i<=n of
// -1 / (eta_q^{i-2j+2} x - eta_q^{i-2j} x).
RatFunc wronskian_shift_form(const FunctionTuple& fs);

// Sign-choice form: rows eta_q^{deltas[i]*(n-i)} D_q^i f_j for i = 0..n-1
// (deltas[i] = +1 or -1), last row D_q^n f_j. Agrees with wronskian() for
// every sign choice.
RatFunc wronskian_sign_form(const FunctionTuple& fs, const std::vector<int>& deltas);

// Checks the four determinant identities exactly:
//   (i)   W(c0 f0, ..., cn fn) = (prod ci) W(f0, ..., fn)
//   (ii)  W(1, f1, ..., fn) = W(D_q f1, ..., D_q fn)
//   (iii) W(f0 g, ..., fn g) = prod_k eta_q^{n-2k}(g) * W(f0, ..., fn)
//   (iv)  W(f0, ..., fn) = prod_k eta_q^{n-2k}(f0) * W(D_q(f1/f0), ..., D_q(fn/f0))
// cs must be nonzero; (iv) requires f0 != 0 (ZeroDivisorError otherwise).
bool verify_properties(const FunctionTuple& fs, const RatFunc& g, const std::vector<Rat>& cs);

// Exact full-column-rank test of the coefficient matrix in the monomial
// basis; the independent oracle for the Wronskian vanishing criterion.
bool linearly_independent(const std::vector<XPoly>& ps);

// Exact rank of a rational matrix by Gaussian elimination.
int exact_rank(std::vector<std::vector<Rat>> m);

}  // namespace wron

}  // namespace awnev
