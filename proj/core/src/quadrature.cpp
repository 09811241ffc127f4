#include "awnev/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "awnev/errors.hpp"

namespace awnev {

RGrid::RGrid(std::vector<double> rs, int nodes) : radii(std::move(rs)), theta_points(nodes) {
    if (theta_points < 64) throw DomainError("RGrid: need at least 64 quadrature nodes");
    if (radii.empty()) throw DomainError("RGrid: empty radius list");
    double prev = 1.0;
    for (double r : radii) {
        if (r <= prev) throw DomainError("RGrid: radii must be strictly increasing and > 1");
        prev = r;
    }
}

RGrid RGrid::geometric(double r0, double r1, int steps, int nodes, double min_radius) {
    if (steps < 1) throw DomainError("RGrid: need at least one step");
    if (r0 <= min_radius)
        throw DomainError("RGrid: smallest radius lies at or below the guard radius");
    std::vector<double> rs;
    if (steps == 1) {
        rs.push_back(r0);
    } else {
        double ratio = std::pow(r1 / r0, 1.0 / (steps - 1));
        for (int i = 0; i < steps; ++i) rs.push_back(r0 * std::pow(ratio, i));
    }
    return RGrid(std::move(rs), nodes);
}

CircleAverage circle_average(const std::function<std::optional<double>(double)>& f,
                             int theta_points, double max_perturbed_fraction) {
    const double step = 2.0 * M_PI / theta_points;
    double acc = 0.0;
    int perturbed = 0;
    for (int j = 0; j < theta_points; ++j) {
        double theta = j * step;
        std::optional<double> v = f(theta);
        if (!v) {
            ++perturbed;
            v = f(theta + 0.5 * step);
            if (!v) v = 0.0;  // doubly singular node: drop it
        }
        acc += *v;
    }
    if (perturbed > max_perturbed_fraction * theta_points)
        throw QuadratureDegenerate("circle_average: " + std::to_string(perturbed) + " of " +
                                   std::to_string(theta_points) + " nodes were singular");
    return {acc / theta_points, perturbed};
}

std::complex<double> z_of_x(const std::complex<double>& x) {
    std::complex<double> w = std::sqrt(x * x - 1.0);
    std::complex<double> z1 = x + w;
    std::complex<double> z2 = x - w;
    return std::abs(z1) >= std::abs(z2) ? z1 : z2;
}

double proximity_m(const RatFunc& f, double r, int theta_points, double quad_eps) {
    if (r <= 1.0) throw DomainError("proximity_m: radius must exceed 1");
    if (f.is_zero()) return 0.0;
    auto integrand = [&](double theta) -> std::optional<double> {
        std::complex<double> x = std::polar(r, theta);
        std::complex<double> z = z_of_x(x);
        double dmag = f.den_magnitude(z);
        if (dmag < quad_eps) return std::nullopt;
        double mag = std::abs(f.num().eval(z)) / dmag;
        return mag > 1.0 ? std::log(mag) : 0.0;
    };
    return circle_average(integrand, theta_points).value;
}

namespace {

double log_max_component(const ProjCurveRep& curve, const std::complex<double>& x) {
    double best = 0.0;
    for (const XPoly& p : curve.components) best = std::max(best, std::abs(p.eval(x)));
    return std::log(best);
}

}  // namespace

double characteristic_T(const ProjCurveRep& curve, double r, int theta_points,
                        double quad_eps) {
    if (r <= 1.0) throw DomainError("characteristic_T: radius must exceed 1");
    auto integrand = [&](double theta) -> std::optional<double> {
        std::complex<double> x = std::polar(r, theta);
        double best = 0.0;
        for (const XPoly& p : curve.components) best = std::max(best, std::abs(p.eval(x)));
        if (best < quad_eps) return std::nullopt;
        return std::log(best);
    };
    return circle_average(integrand, theta_points).value;
}

double proximity_m(const ProjCurveRep& curve, const Hypersurface& D, double r,
                   int theta_points, double quad_eps) {
    if (r <= 1.0) throw DomainError("proximity_m: radius must exceed 1");
    XPoly qf = D.poly.compose(curve.components);
    if (qf.is_zero()) throw CurveInHypersurface("proximity_m: Q(f) vanishes identically");
    const double log_norm_q = std::log(to_double(D.poly.max_abs_coeff()));
    const int d = D.degree;
    auto integrand = [&](double theta) -> std::optional<double> {
        std::complex<double> x = std::polar(r, theta);
        double qmag = std::abs(qf.eval(x));
        if (qmag < quad_eps) return std::nullopt;
        return d * log_max_component(curve, x) + log_norm_q - std::log(qmag);
    };
    return circle_average(integrand, theta_points).value;
}

double FmtReport::spread() const {
    if (rows.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(rows.begin(), rows.end(),
                                        [](const FmtRow& a, const FmtRow& b) {
                                            return a.deviation < b.deviation;
                                        });
    return hi->deviation - lo->deviation;
}

FmtReport fmt_check(const ProjCurveRep& curve, const Hypersurface& D, const RGrid& grid,
                    double cluster_tol, double quad_eps) {
    XPoly qf = D.poly.compose(curve.components);
    if (qf.is_zero()) throw CurveInHypersurface("fmt_check: Q(f) vanishes identically");
    ZeroList zeros = zeros_of_xpoly(qf, cluster_tol);
    FmtReport report;
    for (double r : grid.radii) {
        FmtRow row;
        row.r = r;
        row.m = proximity_m(curve, D, r, grid.theta_points, quad_eps);
        row.N = counting_N(zeros, r);
        row.T = characteristic_T(curve, r, grid.theta_points, quad_eps);
        row.deviation = row.m + row.N - D.degree * row.T;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace awnev
