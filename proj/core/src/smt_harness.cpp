#include "awnev/smt_harness.hpp"

#include <cmath>

#include "awnev/decompose.hpp"
#include "awnev/errors.hpp"
#include "awnev/position.hpp"
#include "awnev/truncated.hpp"
#include "awnev/wronskian.hpp"

namespace awnev {
namespace smt {

bool MarginReport::trend_pass(double slack) const {
    const std::size_t start = rows.size() / 2;
    for (std::size_t i = start; i < rows.size(); ++i)
        if (rows[i].margin_over_T < -slack) return false;
    return true;
}

namespace {

// Zero list of the exact Wronskian of the component z-models.
ZeroList wronskian_zero_list(const ProjCurveRep& curve, double cluster_tol) {
    std::vector<RatFunc> models;
    for (const XPoly& p : curve.components) models.push_back(RatFunc::from(p));
    RatFunc w = wron::wronskian(FunctionTuple(std::move(models), curve.ctx));
    if (w.is_zero()) throw DependentCurve("wronskian of the components vanishes identically");
    if (w.num().is_constant()) return ZeroList({}, 0);
    return zeros_of_laurent_in_x(w.num(), cluster_tol);
}

void require_independent(const ProjCurveRep& curve) {
    if (!wron::linearly_independent(curve.components))
        throw DependentCurve("curve components are linearly dependent");
}

// The determinant rows reach shifts of order n, so every evaluation radius
// must clear the corresponding guard.
void require_radii_above_guard(const RGrid& grid, const AwContext& ctx, int order) {
    if (grid.radii.front() <= ctx.guard_radius(order))
        throw GuardViolation("grid radius at or below the shift guard radius s^-" +
                             std::to_string(order));
}

std::vector<std::vector<int>> independent_subsets(const HyperplaneSet& H, int n) {
    const int p = H.count();
    if (p > 8) throw TooLarge("independent-subset enumeration capped at 8 forms");
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << p); ++mask) {
        std::vector<int> idx;
        for (int j = 0; j < p; ++j)
            if (mask & (1u << j)) idx.push_back(j);
        if (static_cast<int>(idx.size()) > n + 1) continue;
        std::vector<std::vector<Rat>> rows;
        for (int j : idx) rows.push_back(H.forms[static_cast<std::size_t>(j)]);
        if (wron::exact_rank(std::move(rows)) == static_cast<int>(idx.size()))
            subsets.push_back(std::move(idx));
    }
    return subsets;
}

}  // namespace

MarginReport run_general_smt(const ProjCurveRep& curve, const HyperplaneSet& H,
                             const RGrid& grid, double cluster_tol, double quad_eps) {
    const int n = curve.dim();
    if (H.ambient_vars() != n + 1) throw BadArity("run_general_smt: form length mismatch");
    require_independent(curve);
    require_radii_above_guard(grid, curve.ctx, n);

    ZeroList w_zeros = wronskian_zero_list(curve, cluster_tol);
    std::vector<std::vector<int>> subsets = independent_subsets(H, n);
    std::vector<XPoly> lf;
    for (int j = 0; j < H.count(); ++j) lf.push_back(H.apply(j, curve));

    MarginReport report;
    report.theorem = "general";
    for (double r : grid.radii) {
        auto integrand = [&](double theta) -> std::optional<double> {
            std::complex<double> x = std::polar(r, theta);
            double norm = 0.0;
            for (const XPoly& p : curve.components) norm = std::max(norm, std::abs(p.eval(x)));
            std::vector<double> logs(lf.size());
            for (std::size_t j = 0; j < lf.size(); ++j) {
                double mag = std::abs(lf[j].eval(x));
                if (mag < quad_eps) return std::nullopt;
                logs[j] = std::log(norm / mag);
            }
            double best = 0.0;
            bool first = true;
            for (const auto& subset : subsets) {
                double sum = 0.0;
                for (int j : subset) sum += logs[static_cast<std::size_t>(j)];
                if (first || sum > best) best = sum;
                first = false;
            }
            return best;
        };
        double proximity_sum = circle_average(integrand, grid.theta_points).value;
        double lhs = proximity_sum + counting_N(w_zeros, r);
        double T = characteristic_T(curve, r, grid.theta_points, quad_eps);
        double rhs = (n + 1) * T;
        report.rows.push_back({r, lhs, rhs, rhs - lhs, T != 0.0 ? (rhs - lhs) / T : 0.0});
    }
    return report;
}

namespace {

// Auxiliary exact data for one form: z-model of L(f) and its shifted zeros.
struct FormModel {
    XPoly poly;
    RatFunc zmodel;
};

double truncated_count_exact(const RatFunc& g, int level, int delta,
                             const std::vector<GaussRat>& points, const AwContext& ctx,
                             double r) {
    RatFunc shifted = g.scaled_arg(rat_pow(ctx.s, delta));
    std::vector<std::pair<GaussRat, int>> counts;
    for (const GaussRat& z : points) {
        int lead = zero_order_at(shifted, z);
        int credit = nev::shifted_min_order(g, level, z, ctx);
        counts.emplace_back(z, lead - credit);
    }
    return nev::integrated_from_points(counts, r);
}

}  // namespace

TruncatedReports run_truncated_smt(const ProjCurveRep& curve, const HyperplaneSet& H,
                                   const RGrid& grid, const QueryPoints& query_points,
                                   double cluster_tol, double quad_eps) {
    const int n = curve.dim();
    const int p = H.count();
    if (!general_position_check(H, n))
        throw PositionFailed("run_truncated_smt: hyperplanes not in general position");
    require_independent(curve);
    require_radii_above_guard(grid, curve.ctx, n);
    if (!query_points.empty() && static_cast<int>(query_points.size()) != p)
        throw BadArity("run_truncated_smt: query point lists must match the form count");

    ZeroList w_zeros = wronskian_zero_list(curve, cluster_tol);
    std::vector<FormModel> forms;
    for (int j = 0; j < p; ++j) {
        XPoly lf = H.apply(j, curve);
        if (lf.is_zero()) throw DependentCurve("run_truncated_smt: L_j(f) vanishes identically");
        forms.push_back({lf, RatFunc::from(lf)});
    }
    std::vector<ZeroList> lf_zeros;
    for (const FormModel& fm : forms) lf_zeros.push_back(zeros_of_xpoly(fm.poly, cluster_tol));

    const int delta = nev::delta_of(n);
    const bool exact_route = !query_points.empty();
    std::vector<ZeroList> shifted_zeros;
    if (!exact_route) {
        for (const FormModel& fm : forms)
            shifted_zeros.push_back(zeros_of_laurent_in_x(
                fm.zmodel.num().scaled_arg(rat_pow(curve.ctx.s, delta)), cluster_tol));
    }

    TruncatedReports out;
    out.counting_form.theorem = "truncated/counting";
    out.truncated_form.theorem = "truncated/aw";
    if (!exact_route)
        out.truncated_form.notes.push_back(
            "no exact query points supplied; the aw column uses the untruncated "
            "shifted count, an upper substitute for the truncated one");

    for (double r : grid.radii) {
        double T = characteristic_T(curve, r, grid.theta_points, quad_eps);
        double lhs = (p - n - 1) * T;

        double sum_N = 0.0;
        for (const ZeroList& zl : lf_zeros) sum_N += counting_N(zl, r);
        double rhs1 = sum_N - counting_N(w_zeros, r);
        out.counting_form.rows.push_back(
            {r, lhs, rhs1, rhs1 - lhs, T != 0.0 ? (rhs1 - lhs) / T : 0.0});

        double rhs2 = 0.0;
        for (int j = 0; j < p; ++j) {
            if (exact_route) {
                rhs2 += truncated_count_exact(forms[static_cast<std::size_t>(j)].zmodel, n,
                                              delta, query_points[static_cast<std::size_t>(j)],
                                              curve.ctx, r);
            } else {
                rhs2 += counting_N(shifted_zeros[static_cast<std::size_t>(j)], r);
            }
        }
        out.truncated_form.rows.push_back(
            {r, lhs, rhs2, rhs2 - lhs, T != 0.0 ? (rhs2 - lhs) / T : 0.0});
    }
    return out;
}

HypersurfaceSmtResult run_hypersurface_smt(const ProjCurveRep& curve,
                                           const HypersurfaceSmtInput& input,
                                           const RGrid& grid, double cluster_tol,
                                           double quad_eps) {
    const int n = curve.dim();
    const int p = static_cast<int>(input.hypersurfaces.size());
    std::vector<int> dj, sj;
    for (const Hypersurface& D : input.hypersurfaces) {
        if (!D.has_factors())
            throw DomainError("run_hypersurface_smt: hypersurfaces must carry factorizations");
        dj.push_back(D.degree);
        sj.push_back(D.distinct_factor_count());
    }

    HypersurfaceSmtResult result{
        compute_smt_params(n, input.l, dj, sj, input.s_prime, input.eps), {}};
    SmtParams& params = result.params;
    if (!params.hypothesis_ok)
        throw HypothesisFailed("run_hypersurface_smt: beta(alpha+1) < alpha");

    PositionResult pos = hypersurface_position_check(input.hypersurfaces, n, input.l);
    if (!pos.ok)
        throw PositionFailed("run_hypersurface_smt: hypersurfaces failed the position check");
    MarginReport& report = result.report;
    report.theorem = "hypersurface";
    if (!pos.exact)
        report.notes.push_back("position verified only by deterministic sampling (heuristic)");

    int relation_degree =
        input.relation_degree > 0 ? input.relation_degree : 2 * std::max(curve.max_degree(), 1);
    if (!algebraically_nondegenerate(curve, relation_degree))
        throw DependentCurve(
            "run_hypersurface_smt: components satisfy a homogeneous relation within degree " +
            std::to_string(relation_degree));
    report.notes.push_back("algebraic independence checked up to relation degree " +
                           std::to_string(relation_degree));

    if (!input.query_points.empty() &&
        static_cast<int>(input.query_points.size()) != p)
        throw BadArity("run_hypersurface_smt: query point lists must match hypersurface count");
    const bool exact_route = !input.query_points.empty();
    if (!exact_route)
        report.notes.push_back(
            "no exact query points supplied; truncated counts substituted by the "
            "untruncated shifted counts");

    const long long d = params.d.convert_to<long long>();
    // Truncation level from the theorem bundle; the shifted-orbit scan makes
    // it computable even when it is astronomically large. Beyond long long
    // range only the parity matters (the probe set is span-capped), so the
    // clamp preserves it.
    long long level;
    if (params.M1 < Int(1) << 60) {
        level = params.M1.convert_to<long long>();
    } else {
        level = (1LL << 60) + static_cast<long long>(params.M1 % 2);
    }
    const int delta = static_cast<int>(params.M1 % 2 != 0 ? -1 : 0);

    const double alpha_f = to_double(params.alpha);
    const double eps_f = to_double(params.eps);

    // Per hypersurface: either the corollary weights (s' = 1) over Q_j(f)
    // itself, or the s'-decomposition of Q_j^{d/d_j}.
    struct Item {
        RatFunc qf_model;                  // z-model of the counted composition
        std::vector<RatFunc> bin_models;   // z-models of the R*_{j,i}(f)
        double weight;
        ZeroList fallback;                 // untruncated shifted zeros
    };
    std::vector<Item> items;
    for (int j = 0; j < p; ++j) {
        const Hypersurface& D = input.hypersurfaces[static_cast<std::size_t>(j)];
        Item item;
        const int power = static_cast<int>(d / dj[static_cast<std::size_t>(j)]);
        XPoly qf = D.poly.compose(curve.components);
        if (qf.is_zero())
            throw CurveInHypersurface("run_hypersurface_smt: Q_j(f) vanishes identically");
        if (input.s_prime == 1) {
            item.weight = 1.0 / dj[static_cast<std::size_t>(j)];
            item.qf_model = RatFunc::from(qf);
            item.bin_models.push_back(item.qf_model);
        } else {
            item.weight = 1.0 / static_cast<double>(d);
            item.qf_model = RatFunc::from(qf.pow(power));
            std::vector<std::pair<MPoly, int>> scaled_factors;
            for (const auto& [f, mult] : D.factors)
                scaled_factors.emplace_back(f, mult * power);
            Hypersurface scaled(D.poly.pow(power), std::move(scaled_factors));
            for (const MPoly& bin : decomp::polynomial_decompose(scaled, input.s_prime))
                item.bin_models.push_back(RatFunc::from(bin.compose(curve.components)));
        }
        if (!exact_route)
            item.fallback = zeros_of_laurent_in_x(
                item.qf_model.num().scaled_arg(rat_pow(curve.ctx.s, delta)), cluster_tol);
        items.push_back(std::move(item));
    }

    for (double r : grid.radii) {
        double T = characteristic_T(curve, r, grid.theta_points, quad_eps);
        double lhs = (p - (alpha_f + 1.0) * (n + 1) - eps_f) * T;
        double rhs = 0.0;
        for (int j = 0; j < p; ++j) {
            const Item& item = items[static_cast<std::size_t>(j)];
            if (!exact_route) {
                rhs += item.weight * counting_N(item.fallback, r);
                continue;
            }
            const auto& points = input.query_points[static_cast<std::size_t>(j)];
            RatFunc shifted = item.qf_model.scaled_arg(rat_pow(curve.ctx.s, delta));
            std::vector<std::pair<GaussRat, int>> counts;
            for (const GaussRat& z : points) {
                int lead = zero_order_at(shifted, z);
                int credit = 0;
                for (const RatFunc& bin : item.bin_models)
                    credit += nev::shifted_min_order(bin, level, z, curve.ctx);
                counts.emplace_back(z, lead - credit);
            }
            rhs += item.weight * nev::integrated_from_points(counts, r);
        }
        report.rows.push_back({r, lhs, rhs, rhs - lhs, T != 0.0 ? (rhs - lhs) / T : 0.0});
    }
    return result;
}

}  // namespace smt
}  // namespace awnev
