#pragma once

#include <optional>
#include <string>
#include <vector>

#include "awnev/mpoly.hpp"
#include "awnev/quadrature.hpp"
#include "awnev/smt_params.hpp"

namespace awnev {
namespace smt {

struct MarginRow {
    double r;
    double lhs;
    double rhs;
    double margin;         // rhs - lhs
    double margin_over_T;  // margin / T_f(r)
};

struct MarginReport {
    std::string theorem;
    std::vector<MarginRow> rows;       // ordered by r
    std::vector<std::string> notes;    // substitutions, heuristic flags

    // margin/T >= -slack on the top half of the grid.
    bool trend_pass(double slack) const;
};

// Exact z-model query points (zeros planted by construction) per form or
// hypersurface; empty outer vector means none were supplied.
using QueryPoints = std::vector<std::vector<GaussRat>>;

// General-form margin ledger: per radius,
//   lhs = circle average of max over independent subsets K of
//         sum_{j in K} log(||f|| / |L_j(f)|)  +  N_W(r, 0)
//   rhs = (n+1) T_f(r).
// Components must be linearly independent (DependentCurve otherwise);
// the independent-subset enumeration caps the form count at 8.
MarginReport run_general_smt(const ProjCurveRep& curve, const HyperplaneSet& H,
                             const RGrid& grid, double cluster_tol = 1e-8,
                             double quad_eps = 1e-12);

// Truncated-form ledgers, both inequality variants per radius:
//   counting_form:  lhs = (p-n-1) T_f(r), rhs = sum_j N(r, 1/L_j(f)) - N_W(r, 0)
//   truncated_form: rhs = sum_j aw-truncated count at level n; computed
//   exactly when query points are supplied, otherwise substituted by the
//   untruncated shifted count and flagged.
// Hyperplanes must pass the general position check (PositionFailed).
struct TruncatedReports {
    MarginReport counting_form;
    MarginReport truncated_form;
};
TruncatedReports run_truncated_smt(const ProjCurveRep& curve, const HyperplaneSet& H,
                                   const RGrid& grid, const QueryPoints& query_points = {},
                                   double cluster_tol = 1e-8, double quad_eps = 1e-12);

struct HypersurfaceSmtInput {
    std::vector<Hypersurface> hypersurfaces;
    int s_prime = 1;
    int l = 1;
    Rat eps = Rat(1);
    QueryPoints query_points;      // per hypersurface, z-model
    int relation_degree = 0;       // 0: use 2 * max component degree
};

struct HypersurfaceSmtResult {
    SmtParams params;
    MarginReport report;
};

// Hypersurface margin ledger:
//   lhs = (p - (alpha+1)(n+1) - eps) T_f(r)
//   rhs = (1/d) sum_j truncated count at level M1 of Q_j^{d/d_j} with the
//         greedy s'-decomposition (corollary weights 1/d_j when s' = 1).
// Throws HypothesisFailed when beta(alpha+1) < alpha, PositionFailed when
// the position check refutes, DependentCurve when the components admit a
// homogeneous relation within the configured degree.
HypersurfaceSmtResult run_hypersurface_smt(const ProjCurveRep& curve,
                                           const HypersurfaceSmtInput& input,
                                           const RGrid& grid, double cluster_tol = 1e-8,
                                           double quad_eps = 1e-12);

}  // namespace smt
}  // namespace awnev
