#include <doctest.h>

#include <random>

#include "awnev/parser.hpp"
#include "awnev/roots.hpp"
#include "helpers.hpp"

using namespace awnev;

namespace {

Laurent lin(const Rat& root) {
    Laurent g;
    g.add_term(1, Rat(1));
    g.add_term(0, -root);
    return g;
}

}  // namespace

TEST_CASE("order_at on laurent polynomials") {
    Laurent g = lin(Rat(2)) * lin(Rat(2)) * lin(Rat(5));
    CHECK(order_at(g, GaussRat(Rat(2))) == 2);
    CHECK(order_at(g, GaussRat(Rat(5))) == 1);
    CHECK(order_at(lin(Rat(-1)) + Laurent::monomial(0, Rat(2)), GaussRat(Rat(3))) == 0);
    CHECK_THROWS_AS(order_at(Laurent::zero(), GaussRat(Rat(1))), ZeroFunctionError);
    CHECK_THROWS_AS(order_at(g, GaussRat(Rat(0))), DomainError);
}

TEST_CASE("x-factor model carries its planted z-pair") {
    // (z + 1/z)/2 - 17/8 = (z - 4)(z - 1/4)/(2z)
    Laurent g = to_symlaurent(parse_xpoly("x - 17/8")).laurent();
    CHECK(order_at(g, GaussRat(Rat(4))) == 1);
    CHECK(order_at(g, GaussRat(Rat(1, 4))) == 1);
    CHECK(order_at(g, GaussRat(Rat(2))) == 0);
}

TEST_CASE("roots of factored inputs") {
    Laurent g = lin(Rat(2)) * lin(Rat(3));  // z^2 - 5z + 6
    auto roots = roots_numeric(g, 1e-8);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].second == 1);
    CHECK(roots[1].second == 1);
    CHECK(std::abs(roots[0].first - std::complex<double>(2, 0)) < 1e-8);
    CHECK(std::abs(roots[1].first - std::complex<double>(3, 0)) < 1e-8);
}

TEST_CASE("planted multiplicity is clustered") {
    Laurent g = lin(Rat(1)) * lin(Rat(1)) * lin(Rat(1));
    auto roots = roots_numeric(g, 1e-8);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].second == 3);
    CHECK(std::abs(roots[0].first - std::complex<double>(1, 0)) < 1e-8);
}

TEST_CASE("z-roots of a symmetric model pair up") {
    Laurent g = to_symlaurent(parse_xpoly("x^2 - 13/4*x + 3/2")).laurent();
    auto roots = roots_numeric(g, 1e-8);
    REQUIRE(roots.size() == 4);
    // every root's reciprocal is also present
    for (const auto& [z, mult] : roots) {
        bool paired = false;
        for (const auto& [w, m2] : roots) paired = paired || std::abs(w - 1.0 / z) < 1e-6;
        CHECK(paired);
    }
}

TEST_CASE("root completeness on random exact factorizations") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> count(1, 5);
        int k = count(rng);
        Laurent g = Laurent::constant(Rat(1));
        std::vector<Rat> planted;
        for (int i = 0; i < k; ++i) {
            Rat root = testutil::random_nonzero_rat(rng, 6, 2);
            planted.push_back(root);
            g = g * lin(root);
        }
        auto roots = roots_numeric(g, 1e-8);
        int total = 0;
        for (const auto& [z, mult] : roots) total += mult;
        CHECK(total == g.span());
        for (const Rat& root : planted) {
            bool found = false;
            for (const auto& [z, mult] : roots)
                found = found || std::abs(z - std::complex<double>(to_double(root), 0)) < 1e-8;
            CHECK(found);
        }
    }
}

TEST_CASE("zero order of reduced rational functions") {
    RatFunc f(lin(Rat(2)) * lin(Rat(2)), lin(Rat(3)));
    CHECK(zero_order_at(f, GaussRat(Rat(2))) == 2);
    CHECK(zero_order_at(f, GaussRat(Rat(3))) == 0);  // pole, not zero
    CHECK(zero_order_at(f, GaussRat(Rat(7))) == 0);
}
