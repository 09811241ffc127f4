#include <doctest.h>

#include <cmath>
#include <random>

#include "awnev/parser.hpp"
#include "awnev/quadrature.hpp"
#include "helpers.hpp"

using namespace awnev;

namespace {

const AwContext kCtx{Rat(1, 2)};

MPoly coordinate_form(int nvars, int which) {
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(which)] = 1;
    return MPoly::monomial(e, Rat(1));
}

}  // namespace

TEST_CASE("curve (1, x) against {x1 = 0}: identically balanced") {
    ProjCurveRep curve({parse_xpoly("1"), parse_xpoly("x")}, kCtx);
    Hypersurface D(coordinate_form(2, 1));
    RGrid grid = RGrid::geometric(10.0, 10000.0, 13, 2048);
    FmtReport rep = fmt_check(curve, D, grid);
    for (const FmtRow& row : rep.rows) CHECK(std::abs(row.deviation) < 1e-6);
}

TEST_CASE("curve (1, x) against {x0 = 0}: constant deviation") {
    ProjCurveRep curve({parse_xpoly("1"), parse_xpoly("x")}, kCtx);
    Hypersurface D(coordinate_form(2, 0));
    RGrid grid = RGrid::geometric(10.0, 10000.0, 13, 2048);
    FmtReport rep = fmt_check(curve, D, grid);
    CHECK(rep.spread() < 1e-4);
}

TEST_CASE("curve inside the hypersurface is rejected") {
    // Q = x0 x2 - x1^2 vanishes identically on the curve (1, x, x^2)
    MPoly veronese(3);
    veronese.add_term({1, 0, 1}, Rat(1));
    veronese.add_term({0, 2, 0}, Rat(-1));
    ProjCurveRep curve({parse_xpoly("1"), parse_xpoly("x"), parse_xpoly("x^2")}, kCtx);
    RGrid grid = RGrid::geometric(10.0, 100.0, 3, 128);
    CHECK_THROWS_AS(fmt_check(curve, Hypersurface(veronese), grid), CurveInHypersurface);
}

TEST_CASE("random degree-bounded pairs stay within the spread budget") {
    std::mt19937_64 rng(83);
    RGrid grid = RGrid::geometric(10.0, 10000.0, 25, 2048);
    int tested = 0;
    while (tested < 4) {
        // curve components of degree <= 3 with small coefficients keep the
        // composition's zeros far inside the first grid radius
        XPoly f0 = testutil::random_xpoly(rng, 2);
        XPoly f1 = testutil::random_xpoly(rng, 3);
        if (f0.is_zero() || f1.is_zero()) continue;
        if (!xpoly_gcd(f0, f1).is_constant()) continue;
        ProjCurveRep curve({f0, f1}, kCtx);
        MPoly q(2);
        q.add_term({2, 0}, testutil::random_nonzero_rat(rng, 3, 2));
        q.add_term({1, 1}, testutil::random_rat(rng, 3, 2));
        q.add_term({0, 2}, testutil::random_nonzero_rat(rng, 3, 2));
        Hypersurface D(q);
        XPoly qf = D.poly.compose(curve.components);
        if (qf.is_zero()) continue;
        FmtReport rep = fmt_check(curve, D, grid);
        CHECK(rep.spread() < 0.05);
        ++tested;
    }
}
