#pragma once

#include <complex>
#include <vector>

#include "awnev/laurent.hpp"
#include "awnev/ratfunc.hpp"

namespace awnev {

// Largest m such that (z - z0)^m divides g, by exact synthetic division.
// Requires g != 0 and z0 != 0 (monomial factors carry no zeros away from 0).
int order_at(const Laurent& g, const GaussRat& z0);

// Order of the zero of a reduced rational function at z0: the order of the
// numerator when the denominator does not vanish there, otherwise 0.
int zero_order_at(const RatFunc& f, const GaussRat& z0);

// All roots of z^{-min_exp} * g via companion-matrix eigenvalues, with roots
// within cluster_tol of each other merged and their multiplicities summed.
// Multiplicities sum to the degree span of g.
std::vector<std::pair<std::complex<double>, int>> roots_numeric(const Laurent& g,
                                                                double cluster_tol);

// Same for a polynomial in x.
std::vector<std::pair<std::complex<double>, int>> roots_numeric(const XPoly& p,
                                                                double cluster_tol);

}  // namespace awnev
