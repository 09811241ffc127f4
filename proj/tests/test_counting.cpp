#include <doctest.h>

#include <cmath>
#include <random>

#include "awnev/counting.hpp"
#include "awnev/parser.hpp"
#include "helpers.hpp"

using namespace awnev;

TEST_CASE("closed form on planted zero lists") {
    // single zero at the origin
    ZeroList origin({}, 1);
    CHECK(counting_N(origin, std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));

    // f = (x-2)(x-3) at r = 6: log 3 + log 2 = log 6
    ZeroList two_three({{2.0, 1}, {3.0, 1}}, 0);
    CHECK(counting_N(two_three, 6.0) == doctest::Approx(std::log(6.0)).epsilon(1e-12));

    // radius below every modulus
    CHECK(counting_N(two_three, 1.5) == 0.0);
}

TEST_CASE("zero lists from polynomials carry exact origin multiplicity") {
    ZeroList zl = zeros_of_xpoly(parse_xpoly("x^3*(x-2)"), 1e-8);
    CHECK(zl.origin_mult == 3);
    REQUIRE(zl.entries.size() == 1);
    CHECK(zl.entries[0].first == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(zl.total_count() == 4);
}

TEST_CASE("counting function is nondecreasing in r") {
    std::mt19937_64 rng(79);
    std::uniform_real_distribution<double> radius(0.5, 20.0);
    ZeroList zl({{1.5, 2}, {3.0, 1}, {7.5, 3}}, 1);
    double prev_r = 0.1, prev_v = counting_N(zl, prev_r);
    for (int i = 0; i < 50; ++i) {
        double r = prev_r + radius(rng) / 10;
        double v = counting_N(zl, r);
        CHECK(v >= prev_v - 1e-14);
        prev_r = r;
        prev_v = v;
    }
}

TEST_CASE("closed form matches the piecewise integral") {
    // independent oracle: integrate (n(t) - n(0))/t between consecutive
    // jump radii analytically, then add n(0) log r.
    ZeroList zl({{1.25, 1}, {2.0, 2}, {5.5, 1}}, 2);
    for (double r : {1.1, 1.7, 3.0, 6.0, 100.0}) {
        double integral = 0.0;
        double prev = 0.0;
        int running = 0;  // count of nonzero-modulus zeros <= t
        std::vector<std::pair<double, int>> jumps(zl.entries.begin(), zl.entries.end());
        jumps.emplace_back(r, 0);
        for (const auto& [mod, mult] : jumps) {
            if (mod > r) break;
            if (prev > 0.0 && running > 0) integral += running * std::log(mod / prev);
            if (mod <= r) running += mult;
            prev = mod;
        }
        if (prev > 0.0 && prev < r && running > 0) integral += running * std::log(r / prev);
        double oracle = integral + zl.origin_mult * std::log(r);
        CHECK(counting_N(zl, r) == doctest::Approx(oracle).epsilon(1e-9));
    }
}

TEST_CASE("symmetric laurent zeros agree with the x-polynomial zeros") {
    XPoly p = parse_xpoly("(x - 17/8)*(x - 5/4)");
    Laurent lp = to_symlaurent(p).laurent();
    ZeroList from_x = zeros_of_xpoly(p, 1e-8);
    ZeroList from_z = zeros_of_laurent_in_x(lp, 1e-8);
    REQUIRE(from_x.entries.size() == from_z.entries.size());
    for (std::size_t i = 0; i < from_x.entries.size(); ++i) {
        CHECK(from_x.entries[i].first ==
              doctest::Approx(from_z.entries[i].first).epsilon(1e-8));
        CHECK(from_x.entries[i].second == from_z.entries[i].second);
    }
}

TEST_CASE("asymmetric laurent counts only the outer branch") {
    // (z - 4)(z - 1/4) is the pair of one x-zero; scaling z -> z/2 breaks the
    // pairing: roots move to 8 and 1/2, only 8 stays on the |z| >= 1 branch.
    Laurent g = to_symlaurent(parse_xpoly("x - 17/8")).laurent().scaled_arg(Rat(1, 2));
    ZeroList zl = zeros_of_laurent_in_x(g, 1e-8);
    REQUIRE(zl.entries.size() == 1);
    // x = (8 + 1/8)/2 = 65/16
    CHECK(zl.entries[0].first == doctest::Approx(65.0 / 16).epsilon(1e-8));
}
