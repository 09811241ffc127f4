#include "awnev/counting.hpp"

#include <algorithm>
#include <cmath>

#include "awnev/errors.hpp"
#include "awnev/roots.hpp"

namespace awnev {

ZeroList::ZeroList(std::vector<std::pair<double, int>> es, int origin)
    : entries(std::move(es)), origin_mult(origin) {
    for (const auto& [mod, mult] : entries) {
        if (mod <= 0) throw DomainError("ZeroList: moduli must be positive");
        if (mult <= 0) throw DomainError("ZeroList: multiplicities must be positive");
    }
    if (origin_mult < 0) throw DomainError("ZeroList: negative origin multiplicity");
    std::sort(entries.begin(), entries.end());
}

int ZeroList::total_count() const {
    int acc = origin_mult;
    for (const auto& [mod, mult] : entries) acc += mult;
    return acc;
}

int ZeroList::count_within(double t) const {
    int acc = origin_mult;
    for (const auto& [mod, mult] : entries) {
        if (mod > t) break;
        acc += mult;
    }
    return acc;
}

double counting_N(const ZeroList& zeros, double r) {
    if (r <= 0) throw DomainError("counting_N: radius must be positive");
    double acc = zeros.origin_mult * std::log(r);
    for (const auto& [mod, mult] : zeros.entries) {
        if (mod > r) break;
        acc += mult * std::log(r / mod);
    }
    return acc;
}

ZeroList zeros_of_xpoly(const XPoly& p, double cluster_tol) {
    if (p.is_zero()) throw ZeroFunctionError("zeros_of_xpoly: zero polynomial");
    int origin = 0;
    while (p.coeff(origin) == 0) ++origin;
    std::vector<Rat> rest(p.coeffs().begin() + origin, p.coeffs().end());
    XPoly stripped{std::move(rest)};
    std::vector<std::pair<double, int>> mods;
    if (stripped.degree() > 0) {
        for (const auto& [root, mult] : roots_numeric(stripped, cluster_tol)) {
            double m = std::abs(root);
            if (m <= cluster_tol) {
                // Numeric residue at the origin after the exact strip.
                origin += mult;
            } else {
                mods.emplace_back(m, mult);
            }
        }
    }
    return ZeroList(std::move(mods), origin);
}

ZeroList zeros_of_laurent_in_x(const Laurent& g, double cluster_tol) {
    if (g.is_zero()) throw ZeroFunctionError("zeros_of_laurent_in_x: zero function");
    if (g.symmetric()) return zeros_of_xpoly(from_symlaurent(SymLaurent(g)), cluster_tol);
    std::vector<std::pair<double, int>> mods;
    int origin = 0;
    for (const auto& [z, mult] : roots_numeric(g, cluster_tol)) {
        double az = std::abs(z);
        bool on_branch = az > 1.0 + cluster_tol ||
                         (az >= 1.0 - cluster_tol && z.imag() >= -cluster_tol);
        if (!on_branch) continue;
        std::complex<double> x = (z + 1.0 / z) / 2.0;
        double m = std::abs(x);
        if (m <= cluster_tol) {
            origin += mult;
        } else {
            mods.emplace_back(m, mult);
        }
    }
    return ZeroList(std::move(mods), origin);
}

}  // namespace awnev
