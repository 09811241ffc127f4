// Command-line front end: exact Askey-Wilson operator calculus, Wronskian
// determinants, Nevanlinna ledgers, min-max decomposition, and the SMT
// parameter/margin harnesses.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "awnev/config.hpp"
#include "awnev/decompose.hpp"
#include "awnev/errors.hpp"
#include "awnev/growth.hpp"
#include "awnev/parser.hpp"
#include "awnev/report.hpp"
#include "awnev/smt_harness.hpp"
#include "awnev/smt_params.hpp"
#include "awnev/wronskian.hpp"

namespace {

using namespace awnev;
using nlohmann::json;

constexpr int kExitTrendFail = 2;
constexpr int kExitHypothesisFail = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDataError = 65;
constexpr int kExitComputeError = 70;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<XPoly> parse_curve_exprs(const std::string& text) {
    std::vector<XPoly> out;
    for (const std::string& part : split(text, ';')) out.push_back(parse_xpoly(part));
    return out;
}

int parse_int(const std::string& text) {
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used != text.size()) throw DomainError("expected an integer, got '" + text + "'");
        return v;
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("expected an integer, got '" + text + "'");
    }
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    for (const std::string& part : split(text, ',')) out.push_back(rat_from_string(part));
    return out;
}

// Rendering of an operator result: the x-basis when the value is the model
// of a polynomial in x, the raw z-form otherwise.
std::string render_ratfunc(const RatFunc& f) {
    if (f.is_laurent() && f.num().symmetric())
        return from_symlaurent(SymLaurent(f.num())).str();
    return f.str() + "   [z-model]";
}

struct GridFlags {
    double rmin = 10.0;
    double rmax = 10000.0;
    int steps = 25;

    RGrid build(const Config& cfg, double guard = 1.0) const {
        return RGrid::geometric(rmin, rmax, steps, cfg.theta_points, guard);
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& grid) {
    cmd->add_option("--rmin", grid.rmin, "smallest radius");
    cmd->add_option("--rmax", grid.rmax, "largest radius");
    cmd->add_option("--steps", grid.steps, "number of radii (geometric)");
}

void emit(const Config& cfg, const std::string& table_text, const std::string& csv_text,
          const std::string& json_text) {
    switch (cfg.format) {
        case OutputFormat::table: std::cout << table_text; break;
        case OutputFormat::csv: std::cout << csv_text; break;
        case OutputFormat::json: std::cout << json_text; break;
    }
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_ops(const Config& cfg, const std::string& expr, const std::string& op, int n, int M,
            int t, long long k) {
    AwContext ctx(cfg.s);
    RatFunc f = RatFunc::from(parse_xpoly(expr));
    RatFunc result;
    if (op == "dq") {
        result = ops::aw_diff_iter(f, n, ctx);
    } else if (op == "avg") {
        result = ops::aw_avg(f, n, ctx);
    } else if (op == "shift") {
        result = ops::shift(f, k, ctx);
    } else if (op == "mixed") {
        result = ops::mixed(f, M, t, ctx);
    } else {
        throw DomainError("ops: unknown operator '" + op + "'");
    }
    std::cout << render_ratfunc(result) << "\n";
    return 0;
}

int cmd_wronskian(const Config& cfg, const std::string& exprs, const std::string& form) {
    AwContext ctx(cfg.s);
    std::vector<RatFunc> fs;
    for (const XPoly& p : parse_curve_exprs(exprs)) fs.push_back(RatFunc::from(p));
    FunctionTuple tuple(std::move(fs), ctx);
    if (form == "det" || form == "both")
        std::cout << "det form:   " << render_ratfunc(wron::wronskian(tuple)) << "\n";
    if (form == "shift" || form == "both")
        std::cout << "shift form: " << render_ratfunc(wron::wronskian_shift_form(tuple))
                  << "\n";
    if (form == "both") {
        bool equal = wron::wronskian(tuple) == wron::wronskian_shift_form(tuple);
        std::cout << "forms agree: " << (equal ? "yes" : "NO") << "\n";
        if (!equal) return kExitComputeError;
    }
    return 0;
}

int cmd_nevanlinna_fmt(const Config& cfg, const std::string& curve_exprs,
                       const std::string& line, const std::string& q_json_path,
                       const GridFlags& grid_flags) {
    AwContext ctx(cfg.s);
    ProjCurveRep curve(parse_curve_exprs(curve_exprs), ctx);
    std::unique_ptr<Hypersurface> D;
    if (!q_json_path.empty()) {
        D = std::make_unique<Hypersurface>(report::hypersurface_from_json(read_file(q_json_path)));
    } else if (!line.empty()) {
        D = std::make_unique<Hypersurface>(MPoly::linear_form(parse_rat_list(line)));
    } else {
        throw DomainError("nevanlinna fmt: need --line or --q-json");
    }
    RGrid grid = grid_flags.build(cfg);
    FmtReport rep = fmt_check(curve, *D, grid, cfg.cluster_tol, cfg.quad_eps);
    std::ostringstream table;
    table << "r            m            N            T            deviation\n";
    table.precision(10);
    for (const FmtRow& row : rep.rows)
        table << row.r << "  " << row.m << "  " << row.N << "  " << row.T << "  "
              << row.deviation << "\n";
    table << "deviation spread (max - min): " << rep.spread() << "\n";
    emit(cfg, table.str(), report::fmt_to_csv(rep), report::fmt_to_json(rep, cfg, grid));
    return 0;
}

int cmd_nevanlinna_growth(const Config& cfg, const std::string& expr, const std::string& kind,
                          int n, const GridFlags& grid_flags) {
    AwContext ctx(cfg.s);
    nev::GrowthKind gk;
    if (kind == "ld_dq") {
        gk = nev::GrowthKind::ld_dq;
    } else if (kind == "ld_avg") {
        gk = nev::GrowthKind::ld_avg;
    } else if (kind == "shift_N") {
        gk = nev::GrowthKind::shift_N;
    } else {
        throw DomainError("nevanlinna growth: unknown kind '" + kind + "'");
    }
    RGrid grid = grid_flags.build(cfg, ctx.guard_radius(n));
    nev::GrowthReport rep =
        growth_trend(RatFunc::from(parse_xpoly(expr)), gk, n, grid, ctx, cfg.cluster_tol);
    std::cout << report::growth_to_csv(rep);
    std::cout << "# empirical sampling only; no pass/fail verdict\n";
    return 0;
}

int cmd_decompose(const Config& cfg, const std::string& degrees, int bins,
                  const std::string& poly_json_path) {
    std::unique_ptr<decomp::DegreeMultiset> ds;
    if (!degrees.empty()) {
        std::vector<int> values;
        for (const std::string& part : split(degrees, ',')) values.push_back(parse_int(part));
        ds = std::make_unique<decomp::DegreeMultiset>(values);
    } else if (!poly_json_path.empty()) {
        Hypersurface D = report::hypersurface_from_json(read_file(poly_json_path));
        if (!D.has_factors()) throw DomainError("decompose: JSON carries no factors");
        std::vector<int> values;
        for (const auto& [f, mult] : D.factors) values.push_back(mult * f.total_degree());
        ds = std::make_unique<decomp::DegreeMultiset>(values);
    } else {
        throw DomainError("decompose: need --degrees or --poly-json");
    }
    auto [dec, trace] = decomp::greedy_decompose(*ds, bins);
    std::ostringstream table;
    table << "bin degrees:";
    for (int b : dec.bin_degrees) table << " " << b;
    table << "   (max " << dec.max_degree() << ", bound "
          << decomp::degree_bound(ds->total(), ds->count(), bins) << ")\n\n";
    table << decomp::render_stage_table(*ds, bins);
    std::string json_text = report::decomposition_to_json(dec, trace);
    emit(cfg, table.str(), json_text, json_text);
    return 0;
}

int cmd_params(int n, const std::string& dhat, const std::string& alpha,
               const std::string& eps, int l, const std::string& dj, const std::string& sj,
               int s_prime) {
    smt::SmtParams params;
    if (!dj.empty()) {
        std::vector<int> djs, sjs;
        for (const std::string& part : split(dj, ',')) djs.push_back(parse_int(part));
        for (const std::string& part : split(sj, ',')) sjs.push_back(parse_int(part));
        params = smt::compute_smt_params(n, l, djs, sjs, s_prime, rat_from_string(eps));
    } else {
        params = smt::compute_certificates(n, Int(dhat), rat_from_string(alpha),
                                           rat_from_string(eps));
    }
    std::cout << params.summary() << "\n";
    return params.hypothesis_ok ? 0 : kExitHypothesisFail;
}

// Input schema for `smt`: {"curve": [...], "hyperplanes": [[...]] or
// "hypersurfaces": [...], "grid": {...}, "eps": "1", "s_prime": 1, "l": 1,
// "query_points": [[[re, im], ...], ...]}.
int cmd_smt(const Config& cfg, const std::string& input_path, const std::string& theorem,
            const std::string& out_path) {
    json j = json::parse(read_file(input_path), nullptr, false);
    if (j.is_discarded()) throw DomainError("smt: malformed input JSON");
    AwContext ctx(cfg.s);

    std::vector<XPoly> comps;
    for (const auto& item : j.at("curve")) {
        if (item.is_string()) {
            comps.push_back(parse_xpoly(item.get<std::string>()));
        } else {
            comps.push_back(report::xpoly_from_json(item.dump()));
        }
    }
    ProjCurveRep curve(std::move(comps), ctx);

    GridFlags grid_flags;
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        grid_flags.rmin = g.value("rmin", grid_flags.rmin);
        grid_flags.rmax = g.value("rmax", grid_flags.rmax);
        grid_flags.steps = g.value("steps", grid_flags.steps);
    }

    smt::QueryPoints query_points;
    for (const auto& per_form : j.value("query_points", json::array())) {
        std::vector<GaussRat> pts;
        for (const auto& pt : per_form)
            pts.emplace_back(rat_from_string(pt.at(0).get<std::string>()),
                             rat_from_string(pt.at(1).get<std::string>()));
        query_points.push_back(std::move(pts));
    }

    auto finish = [&](const std::vector<smt::MarginReport>& reports, const RGrid& grid) {
        bool pass = true;
        std::ostringstream all_json;
        for (const smt::MarginReport& rep : reports) {
            pass = pass && rep.trend_pass(cfg.slack);
            std::string json_text = report::margin_to_json(rep, cfg, grid);
            all_json << json_text;
            if (cfg.format == OutputFormat::csv) {
                std::cout << "# " << rep.theorem << "\n" << report::margin_to_csv(rep);
            } else {
                std::cout << json_text;
            }
            for (const std::string& note : rep.notes) std::cerr << "note: " << note << "\n";
            std::cerr << rep.theorem << " trend: "
                      << (rep.trend_pass(cfg.slack) ? "pass" : "FAIL") << "\n";
        }
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            out << all_json.str();
        }
        return pass ? 0 : kExitTrendFail;
    };

    if (theorem == "general" || theorem == "truncated") {
        std::vector<std::vector<Rat>> forms;
        for (const auto& row : j.at("hyperplanes")) {
            std::vector<Rat> form;
            for (const auto& c : row) form.push_back(rat_from_string(c.get<std::string>()));
            forms.push_back(std::move(form));
        }
        HyperplaneSet H(std::move(forms));
        RGrid grid = grid_flags.build(cfg, ctx.guard_radius(curve.dim()));
        if (theorem == "general")
            return finish({smt::run_general_smt(curve, H, grid, cfg.cluster_tol, cfg.quad_eps)},
                          grid);
        smt::TruncatedReports reports =
            smt::run_truncated_smt(curve, H, grid, query_points, cfg.cluster_tol, cfg.quad_eps);
        return finish({reports.counting_form, reports.truncated_form}, grid);
    }
    if (theorem == "hypersurface") {
        smt::HypersurfaceSmtInput input;
        for (const auto& hs : j.at("hypersurfaces"))
            input.hypersurfaces.push_back(report::hypersurface_from_json(hs.dump()));
        input.s_prime = j.value("s_prime", 1);
        input.l = j.value("l", curve.dim());
        input.eps = rat_from_string(j.value("eps", std::string("1")));
        input.relation_degree = cfg.relation_degree;
        input.query_points = std::move(query_points);
        RGrid grid = grid_flags.build(cfg);
        smt::HypersurfaceSmtResult result =
            smt::run_hypersurface_smt(curve, input, grid, cfg.cluster_tol, cfg.quad_eps);
        std::cerr << result.params.summary() << "\n";
        return finish({result.report}, grid);
    }
    throw DomainError("smt: unknown theorem '" + theorem + "'");
}

int cmd_table1() {
    // The embedded golden stage table for degrees {6,5,5,5,5,5,3,2,2,1}
    // split into three bins, plus the resulting bin degrees.
    static const char* kGolden =
        "bin degrees: 13 13 13\n"
        "stage | R1  | R2      | R3      | d(k) | s(k) | Imax | Imin\n"
        "k=6   | 6_1 |         |         | 6    | 1    | 6    | 0   \n"
        "k=5   | 5_6 | 5_2+5_4 | 5_3+5_5 | 31   | 6    | 11   | 10  \n"
        "k=4   |     |         |         | 31   | 6    | 11   | 10  \n"
        "k=3   |     | 3_7     |         | 34   | 7    | 13   | 10  \n"
        "k=2   | 2_9 |         | 2_8     | 38   | 9    | 13   | 12  \n"
        "k=1   |     |         | 1_10    | 39   | 10   | 13   | 13  \n";
    decomp::DegreeMultiset ds({6, 5, 5, 5, 5, 5, 3, 2, 2, 1});
    auto [dec, trace] = decomp::greedy_decompose(ds, 3);
    std::ostringstream os;
    os << "bin degrees:";
    for (int b : dec.bin_degrees) os << " " << b;
    os << "\n" << decomp::render_stage_table(ds, 3);
    if (os.str() == kGolden) {
        std::cout << os.str() << "table1: OK (byte-identical to the golden table)\n";
        return 0;
    }
    std::cout << "table1: MISMATCH\n--- computed ---\n"
              << os.str() << "--- golden ---\n"
              << kGolden;
    return kExitComputeError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Askey-Wilson difference calculus and value-distribution ledgers"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global flags after a subcommand name too

    std::string config_path;
    std::string s_override;
    std::string format_override;
    int theta_override = 0;
    app.add_option("--config", config_path, "key = value configuration file")
        ->configurable(false);
    app.add_option("--s", s_override, "q^{1/2} as an exact rational in (0,1)");
    app.add_option("--theta-points", theta_override, "quadrature nodes on the circle");
    app.add_option("--format", format_override, "output format: table, csv, json");

    // ops
    auto* ops_cmd = app.add_subcommand("ops", "apply one operator to a polynomial in x");
    std::string ops_expr, ops_op = "dq";
    int ops_n = 1, ops_M = 1, ops_t = 0;
    long long ops_k = 1;
    ops_cmd->add_option("--expr", ops_expr, "polynomial in x")->required();
    ops_cmd->add_option("--op", ops_op, "dq | avg | shift | mixed");
    ops_cmd->add_option("--n", ops_n, "iterate (dq) or order (avg)");
    ops_cmd->add_option("--k", ops_k, "shift exponent");
    ops_cmd->add_option("--M", ops_M, "mixed: total level");
    ops_cmd->add_option("--t", ops_t, "mixed: difference order");

    // wronskian
    auto* wron_cmd = app.add_subcommand("wronskian", "determinant of a function tuple");
    std::string wron_exprs, wron_form = "both";
    wron_cmd->add_option("--exprs", wron_exprs, "semicolon-separated polynomials")->required();
    wron_cmd->add_option("--form", wron_form, "det | shift | both");

    // nevanlinna
    auto* nev_cmd = app.add_subcommand("nevanlinna", "FMT ledger or growth sampling");
    std::string nev_mode = "fmt", nev_curve, nev_line, nev_qjson, nev_expr, nev_kind = "ld_dq";
    int nev_n = 1;
    GridFlags nev_grid;
    nev_cmd->add_option("--mode", nev_mode, "fmt | growth");
    nev_cmd->add_option("--curve", nev_curve, "semicolon-separated components");
    nev_cmd->add_option("--line", nev_line, "hyperplane coefficients, comma-separated");
    nev_cmd->add_option("--q-json", nev_qjson, "hypersurface JSON file");
    nev_cmd->add_option("--expr", nev_expr, "growth: the function");
    nev_cmd->add_option("--kind", nev_kind, "growth: ld_dq | ld_avg | shift_N");
    nev_cmd->add_option("--n", nev_n, "growth: operator order");
    add_grid_flags(nev_cmd, nev_grid);

    // decompose
    auto* dec_cmd = app.add_subcommand("decompose", "min-max factor distribution");
    std::string dec_degrees, dec_polyjson;
    int dec_bins = 1;
    dec_cmd->add_option("--degrees", dec_degrees, "comma-separated factor degrees");
    dec_cmd->add_option("--poly-json", dec_polyjson, "factored polynomial JSON file");
    dec_cmd->add_option("--bins", dec_bins, "number of coprime blocks")->required();

    // smt
    auto* smt_cmd = app.add_subcommand("smt", "margin ledger for one theorem harness");
    std::string smt_input, smt_theorem = "general", smt_out;
    smt_cmd->add_option("--input", smt_input, "JSON input file")->required();
    smt_cmd->add_option("--theorem", smt_theorem, "general | truncated | hypersurface");
    smt_cmd->add_option("--output", smt_out, "write the JSON report here too");

    // params
    auto* par_cmd = app.add_subcommand("params", "quantitative bundle and certificates");
    std::string par_dhat = "1", par_alpha = "1", par_eps = "1", par_dj, par_sj;
    int par_n = 1, par_l = 1, par_sprime = 1;
    par_cmd->add_option("--n", par_n, "projective dimension")->required();
    par_cmd->add_option("--dhat", par_dhat, "common degree multiple");
    par_cmd->add_option("--alpha", par_alpha, "decomposition ratio (low-level mode)");
    par_cmd->add_option("--eps", par_eps, "epsilon");
    par_cmd->add_option("--l", par_l, "subgeneral position index");
    par_cmd->add_option("--dj", par_dj, "comma-separated hypersurface degrees");
    par_cmd->add_option("--sj", par_sj, "comma-separated distinct factor counts");
    par_cmd->add_option("--sprime", par_sprime, "decomposition arity");

    // table1
    app.add_subcommand("table1", "golden check of the distribution table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        Config cfg = config_from_env();
        if (!config_path.empty()) cfg = config_from_file(config_path, cfg);
        if (!s_override.empty()) cfg.s = rat_from_string(s_override);
        if (theta_override > 0) cfg.theta_points = theta_override;
        if (!format_override.empty()) cfg.format = output_format_from_string(format_override);
        cfg.validate();

        if (ops_cmd->parsed())
            return cmd_ops(cfg, ops_expr, ops_op, ops_n, ops_M, ops_t, ops_k);
        if (wron_cmd->parsed()) return cmd_wronskian(cfg, wron_exprs, wron_form);
        if (nev_cmd->parsed()) {
            if (nev_mode == "fmt")
                return cmd_nevanlinna_fmt(cfg, nev_curve, nev_line, nev_qjson, nev_grid);
            if (nev_mode == "growth")
                return cmd_nevanlinna_growth(cfg, nev_expr, nev_kind, nev_n, nev_grid);
            throw DomainError("nevanlinna: unknown mode '" + nev_mode + "'");
        }
        if (dec_cmd->parsed()) return cmd_decompose(cfg, dec_degrees, dec_bins, dec_polyjson);
        if (smt_cmd->parsed()) return cmd_smt(cfg, smt_input, smt_theorem, smt_out);
        if (par_cmd->parsed())
            return cmd_params(par_n, par_dhat, par_alpha, par_eps, par_l, par_dj, par_sj,
                              par_sprime);
        return cmd_table1();
    } catch (const HypothesisFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesisFail;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const ExponentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const BadArity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const TooFew& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const NotEnoughFactors& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const PositionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const DependentCurve& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputeError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitComputeError;
    }
}
