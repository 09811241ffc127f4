#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "awnev/counting.hpp"
#include "awnev/mpoly.hpp"
#include "awnev/ratfunc.hpp"

namespace awnev {

// Strictly increasing evaluation radii (all > 1) plus a quadrature
// resolution (>= 64 nodes on the circle).
struct RGrid {
    std::vector<double> radii;
    int theta_points;

    RGrid(std::vector<double> rs, int nodes);

    // Geometric grid r0 .. r1 in `steps` points. Radii at or below
    // min_radius (e.g. an operator guard radius) are rejected.
    static RGrid geometric(double r0, double r1, int steps, int nodes,
                           double min_radius = 1.0);
};

// Uniform trapezoid average over the circle: nodes theta_j = 2 pi j / n.
// The integrand may refuse a node (near-singular); such nodes are re-sampled
// half a step away. More than 1% refused nodes raises QuadratureDegenerate.
struct CircleAverage {
    double value;
    int perturbed;
};
CircleAverage circle_average(const std::function<std::optional<double>(double)>& f,
                             int theta_points, double max_perturbed_fraction = 0.01);

// Joukowski branch: the z with x = (z + 1/z)/2 and |z| >= 1.
std::complex<double> z_of_x(const std::complex<double>& x);

// m(r, f) = circle average of log+ |f| over |x| = r, evaluated through the
// z-model branch. Nodes with |denominator| below quad_eps are perturbed.
double proximity_m(const RatFunc& f, double r, int theta_points, double quad_eps = 1e-12);

// Characteristic of a polynomial curve: circle average of log max_k |f_k|.
double characteristic_T(const ProjCurveRep& curve, double r, int theta_points,
                        double quad_eps = 1e-12);

// Proximity to a hypersurface: circle average of
//   log( ||f||^d * ||Q|| / |Q(f)| ).
double proximity_m(const ProjCurveRep& curve, const Hypersurface& D, double r,
                   int theta_points, double quad_eps = 1e-12);

// First Main Theorem ledger: per radius, m + N - d*T should be constant.
struct FmtRow {
    double r;
    double m;
    double N;
    double T;
    double deviation;
};
struct FmtReport {
    std::vector<FmtRow> rows;
    // max - min of the deviation column.
    double spread() const;
};

// Throws CurveInHypersurface when Q(f) vanishes identically.
FmtReport fmt_check(const ProjCurveRep& curve, const Hypersurface& D, const RGrid& grid,
                    double cluster_tol = 1e-8, double quad_eps = 1e-12);

}  // namespace awnev
