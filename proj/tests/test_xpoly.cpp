#include <doctest.h>

#include <random>

#include "awnev/parser.hpp"
#include "awnev/xpoly.hpp"
#include "helpers.hpp"

using namespace awnev;

TEST_CASE("parser grammar-forced values") {
    XPoly p = parse_xpoly("x^2 - 3*x + 1/2");
    CHECK(p.coeffs() == std::vector<Rat>{Rat(1, 2), Rat(-3), Rat(1)});
    CHECK(parse_xpoly("0").is_zero());
    CHECK(parse_xpoly("0").coeffs().empty());
}

TEST_CASE("parser product expansion") {
    // hand expansion: (x-2)(x-3) = x^2 - 5x + 6
    CHECK(parse_xpoly("(x-2)*(x-3)").coeffs() == std::vector<Rat>{Rat(6), Rat(-5), Rat(1)});
    CHECK(parse_xpoly("(x - 2)^3") == parse_xpoly("x^3 - 6*x^2 + 12*x - 8"));
    CHECK(parse_xpoly("-x^2") == -parse_xpoly("x^2"));
    CHECK(parse_xpoly("2/3*x + 1/6*x") == parse_xpoly("5/6*x"));
}

TEST_CASE("parser error reporting") {
    CHECK_THROWS_AS(parse_xpoly("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_xpoly("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_xpoly("x^-2"), ExponentError);
    CHECK_THROWS_AS(parse_xpoly("x^1/2"), ExponentError);
    CHECK_THROWS_AS(parse_xpoly("y"), SyntaxError);
    try {
        parse_xpoly("x + $");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("substitution examples") {
    Laurent x = to_symlaurent(XPoly::x()).laurent();
    CHECK(x.coeff(1) == Rat(1, 2));
    CHECK(x.coeff(-1) == Rat(1, 2));
    CHECK(x.coeff(0) == Rat(0));

    Laurent one = to_symlaurent(XPoly::constant(Rat(1))).laurent();
    CHECK(one == Laurent::constant(Rat(1)));

    // hand expansion of ((z + 1/z)/2)^2
    Laurent x2 = to_symlaurent(parse_xpoly("x^2")).laurent();
    CHECK(x2.coeff(2) == Rat(1, 4));
    CHECK(x2.coeff(0) == Rat(1, 2));
    CHECK(x2.coeff(-2) == Rat(1, 4));
    CHECK(x2.span() == 4);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        XPoly p = testutil::random_xpoly(rng, 8);
        XPoly q = testutil::random_xpoly(rng, 8);
        CHECK(to_symlaurent(p * q) == to_symlaurent(p) * to_symlaurent(q));
        CHECK(to_symlaurent(p + q).laurent() ==
              to_symlaurent(p).laurent() + to_symlaurent(q).laurent());
    }
}

TEST_CASE("from_symlaurent inverts to_symlaurent") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        XPoly p = testutil::random_xpoly(rng, 9, false);
        CHECK(from_symlaurent(to_symlaurent(p)) == p);
    }
}

TEST_CASE("pointwise agreement of the two representations") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        XPoly p = testutil::random_xpoly(rng, 6);
        Laurent lp = to_symlaurent(p).laurent();
        GaussRat z(testutil::random_nonzero_rat(rng), testutil::random_rat(rng));
        GaussRat x = Rat(1, 2) * (z + z.inverse());
        CHECK(p.eval_exact(x) == lp.eval_exact(z));
    }
}

TEST_CASE("order_at examples") {
    GaussRat two(Rat(2));
    CHECK(order_at(parse_xpoly("(x-2)^2*(x-5)"), two) == 2);
    CHECK(order_at(parse_xpoly("x + 1"), GaussRat(Rat(3))) == 0);
    CHECK(order_at(parse_xpoly("(x-2)^4*(x-5)^2"), GaussRat(Rat(5))) == 2);
    CHECK_THROWS_AS(order_at(XPoly::zero(), two), ZeroFunctionError);
}

TEST_CASE("order additivity") {
    std::mt19937_64 rng(19);
    // (x - 3/2)^2 + 1 vanishes at 3/2 +- i to first order exactly
    GaussRat x0(Rat(3, 2), Rat(1));
    XPoly base = XPoly::x() - XPoly::constant(Rat(3, 2));
    XPoly planted = base * base + XPoly::constant(Rat(1));
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> mult(0, 3);
        int mf = mult(rng), mg = mult(rng);
        XPoly f = planted.pow(mf) * testutil::random_xpoly(rng, 2);
        XPoly g = planted.pow(mg) * testutil::random_xpoly(rng, 2);
        int of = order_at(f, x0), og = order_at(g, x0);
        CHECK(order_at(f * g, x0) == of + og);
        CHECK(of >= mf);
        CHECK(og >= mg);
    }
}

TEST_CASE("rendering descending powers") {
    CHECK(parse_xpoly("x^2 - 3*x + 1/2").str() == "x^2 - 3 * x + 1/2");
    CHECK(XPoly::zero().str() == "0");
    CHECK((XPoly::x() * Rat(5, 2)).str() == "5/2 * x");
    CHECK(parse_xpoly(parse_xpoly("(x-2)*(x-3)").str()) == parse_xpoly("(x-2)*(x-3)"));
}
