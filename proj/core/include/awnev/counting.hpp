#pragma once

#include <vector>

#include "awnev/laurent.hpp"
#include "awnev/xpoly.hpp"

namespace awnev {

// Zero data of a function of x: nonzero moduli with multiplicities (sorted
// ascending) plus the multiplicity at the origin.
struct ZeroList {
    std::vector<std::pair<double, int>> entries;
    int origin_mult = 0;

    ZeroList() = default;
    ZeroList(std::vector<std::pair<double, int>> es, int origin);

    int total_count() const;
    // Zeros with modulus <= t, counting multiplicity (the origin included).
    int count_within(double t) const;
};

// Closed form of the integrated counting function for discrete zeros:
//   N(r) = sum_{0 < |x_k| <= r} mult_k log(r / |x_k|) + origin_mult * log r.
double counting_N(const ZeroList& zeros, double r);

// Zero list of a polynomial in x: origin multiplicity read off exactly from
// trailing coefficients, remaining roots by companion matrix.
ZeroList zeros_of_xpoly(const XPoly& p, double cluster_tol);

// Zero list in the x-plane of a Laurent polynomial in z under the branch
// |z| >= 1: the z-roots with |z| > 1 map to x = (z + 1/z)/2; unit-circle
// roots contribute through the upper semicircle only. Symmetric input is
// converted exactly to its x-polynomial first.
ZeroList zeros_of_laurent_in_x(const Laurent& g, double cluster_tol);

}  // namespace awnev
