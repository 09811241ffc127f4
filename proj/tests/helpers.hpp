#pragma once

#include <random>

#include "awnev/laurent.hpp"
#include "awnev/ratfunc.hpp"
#include "awnev/xpoly.hpp"

namespace testutil {

using awnev::Laurent;
using awnev::Rat;
using awnev::RatFunc;
using awnev::XPoly;

inline Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    Rat r = random_rat(rng, num_range, den_range);
    while (r == 0) r = random_rat(rng, num_range, den_range);
    return r;
}

inline XPoly random_xpoly(std::mt19937_64& rng, int max_degree, bool force_nonzero = true) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(rng);
    std::vector<Rat> coeffs(static_cast<std::size_t>(d) + 1);
    for (auto& c : coeffs) c = random_rat(rng);
    XPoly p{std::move(coeffs)};
    if (force_nonzero && p.is_zero()) return XPoly::constant(Rat(1, 2));
    return p;
}

inline RatFunc random_poly_ratfunc(std::mt19937_64& rng, int max_degree,
                                   bool force_nonzero = true) {
    return RatFunc::from(random_xpoly(rng, max_degree, force_nonzero));
}

}  // namespace testutil
