#include <doctest.h>

#include "awnev/rational.hpp"

using namespace awnev;

TEST_CASE("rational string round trip") {
    CHECK(rat_from_string("1/2") == Rat(1, 2));
    CHECK(rat_from_string("-3") == Rat(-3));
    CHECK(rat_from_string("+4/6") == Rat(2, 3));
    CHECK(rat_to_string(Rat(-7, 3)) == "-7/3");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(rat_from_string("1/0"), ZeroDenominatorError);
    CHECK_THROWS_AS(rat_from_string("a"), DomainError);
    CHECK_THROWS_AS(rat_from_string("1/2x"), DomainError);
}

TEST_CASE("rational powers, floor, ceil") {
    CHECK(rat_pow(Rat(1, 2), -3) == Rat(8));
    CHECK(rat_pow(Rat(2, 3), 2) == Rat(4, 9));
    CHECK(rat_pow(Rat(5), 0) == Rat(1));
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_floor(Rat(4)) == 4);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK(rat_ceil(Rat(-7, 2)) == -3);
}

TEST_CASE("integer helpers") {
    CHECK(int_factorial(Int(5)) == 120);
    CHECK(int_factorial(Int(0)) == 1);
    CHECK(int_binomial(Int(19), Int(1)) == 19);
    CHECK(int_binomial(Int(10), Int(3)) == 120);
    CHECK(int_binomial(Int(4), Int(7)) == 0);
    CHECK(int_lcm(Int(4), Int(6)) == 12);
    CHECK(int_lcm(Int(2), Int(2)) == 2);
}

TEST_CASE("gaussian rational field operations") {
    GaussRat i(Rat(0), Rat(1));
    CHECK(i * i == GaussRat(Rat(-1)));
    GaussRat z(Rat(3), Rat(4));
    CHECK(z.norm2() == Rat(25));
    CHECK(z * z.inverse() == GaussRat(Rat(1)));
    CHECK((z / z) == GaussRat(Rat(1)));
    CHECK_THROWS_AS(GaussRat(Rat(0)).inverse(), ZeroDenominatorError);
}
