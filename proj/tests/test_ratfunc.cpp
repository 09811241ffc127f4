#include <doctest.h>

#include <random>

#include "awnev/ratfunc.hpp"
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

TEST_CASE("reduction cancels common factors") {
    // (z-2)(z-3) / (z-2) == z-3
    RatFunc f(lin(Rat(2)) * lin(Rat(3)), lin(Rat(2)));
    CHECK(f.is_laurent());
    CHECK(f.num() == lin(Rat(3)));
}

TEST_CASE("canonical form fixes the monomial ambiguity") {
    // 1/z: den exponent must start at 0
    RatFunc a(Laurent::constant(Rat(1)), Laurent::monomial(1, Rat(1)));
    CHECK(a.den() == Laurent::constant(Rat(1)));
    CHECK(a.num() == Laurent::monomial(-1, Rat(1)));

    // equal functions written differently compare equal coefficientwise
    RatFunc b(Laurent::monomial(-1, Rat(1)), Laurent::constant(Rat(1)));
    CHECK(a == b);
    RatFunc c(Laurent::monomial(2, Rat(3)), Laurent::monomial(3, Rat(6)));
    RatFunc d(Laurent::monomial(-1, Rat(1)), Laurent::constant(Rat(2)));
    CHECK(c == d);
}

TEST_CASE("denominator is monic after reduction") {
    RatFunc f(lin(Rat(1)), lin(Rat(2)) * Rat(-5));
    CHECK(f.den().coeff(f.den().max_exp()) == Rat(1));
    CHECK(f.den().min_exp() == 0);
}

TEST_CASE("zero function is 0/1") {
    RatFunc z(Laurent::zero(), lin(Rat(7)));
    CHECK(z.is_zero());
    CHECK(z.den() == Laurent::constant(Rat(1)));
    CHECK_THROWS_AS(RatFunc(lin(Rat(1)), Laurent::zero()), ZeroDenominatorError);
}

TEST_CASE("field arithmetic round trips") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        RatFunc f = testutil::random_poly_ratfunc(rng, 4);
        RatFunc g = testutil::random_poly_ratfunc(rng, 4);
        CHECK((f + g) - g == f);
        CHECK(f * g / g == f);
        CHECK((f / g) * g == f);
        CHECK(f - f == RatFunc());
    }
    CHECK_THROWS_AS(RatFunc::constant(Rat(1)) / RatFunc(), ZeroDenominatorError);
}
