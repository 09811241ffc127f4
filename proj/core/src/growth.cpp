#include "awnev/growth.hpp"

#include <cmath>

#include "awnev/errors.hpp"

namespace awnev {
namespace nev {

std::string growth_kind_name(GrowthKind k) {
    switch (k) {
        case GrowthKind::ld_dq: return "ld_dq";
        case GrowthKind::ld_avg: return "ld_avg";
        case GrowthKind::shift_N: return "shift_N";
    }
    return "?";
}

namespace {

// T(r, f) = m(r, f) + N(r, poles of f) for a rational function of x.
double characteristic_of_ratfunc(const RatFunc& f, double r, int theta_points,
                                 double cluster_tol) {
    double m = proximity_m(f, r, theta_points);
    double N = 0.0;
    if (!f.den().is_constant())
        N = counting_N(zeros_of_laurent_in_x(f.den(), cluster_tol), r);
    return m + N;
}

}  // namespace

GrowthReport growth_trend(const RatFunc& f, GrowthKind kind, int n, const RGrid& grid,
                          const AwContext& ctx, double cluster_tol) {
    if (n < 1) throw DomainError("growth_trend: n must be positive");
    for (double r : grid.radii)
        if (r <= ctx.guard_radius(n))
            throw GuardViolation("growth_trend: grid radius inside guard radius");

    GrowthReport report{kind, n, {}};
    if (f.is_zero() || (f.is_laurent() && f.num().is_constant())) {
        // Constant function: every sampled quantity vanishes.
        for (double r : grid.radii) report.rows.push_back({r, 0.0, 0.0, 0.0});
        return report;
    }

    RatFunc quotient;
    if (kind == GrowthKind::ld_dq) {
        quotient = ops::aw_diff_iter(f, n, ctx) / f;
    } else if (kind == GrowthKind::ld_avg) {
        quotient = ops::aw_avg(f, n, ctx) / f;
    }

    for (double r : grid.radii) {
        double quantity = 0.0;
        if (kind == GrowthKind::shift_N) {
            if (f.num().is_constant()) {
                quantity = 0.0;  // no zeros anywhere
            } else {
                double base = counting_N(zeros_of_laurent_in_x(f.num(), cluster_tol), r);
                double up = counting_N(
                    zeros_of_laurent_in_x(f.num().scaled_arg(ctx.s), cluster_tol), r);
                double down = counting_N(
                    zeros_of_laurent_in_x(f.num().scaled_arg(Rat(1) / ctx.s), cluster_tol), r);
                quantity = std::max(std::abs(up - base), std::abs(down - base));
            }
        } else {
            quantity = proximity_m(quotient, r, grid.theta_points);
        }
        double T = characteristic_of_ratfunc(f, r, grid.theta_points, cluster_tol);
        double scale = T / std::log(std::log(r));
        report.rows.push_back({r, quantity, T, scale > 0 ? quantity / scale : 0.0});
    }
    return report;
}

}  // namespace nev
}  // namespace awnev
