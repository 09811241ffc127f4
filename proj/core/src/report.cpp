#include "awnev/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

#include "awnev/errors.hpp"

namespace awnev {
namespace report {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw DomainError("report: malformed JSON");
    return j;
}

// Doubles are carried through JSON as shortest-round-trip strings so that
// re-parsing reproduces the exact values the report was built from.
json num(double v) { return json(v); }

json grid_meta(const Config& cfg, const RGrid& grid) {
    return json{{"s", rat_to_string(cfg.s)},
                {"q", rat_to_string(cfg.s * cfg.s)},
                {"theta_points", grid.theta_points},
                {"radii", grid.radii},
                {"cluster_tol", cfg.cluster_tol},
                {"quad_eps", cfg.quad_eps},
                {"slack", cfg.slack}};
}

}  // namespace

std::string xpoly_to_json(const XPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(rat_to_string(p.coeff(k)));
    return arr.dump();
}

XPoly xpoly_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_array()) throw DomainError("xpoly_from_json: expected an array");
    std::vector<Rat> coeffs;
    for (const auto& item : j) coeffs.push_back(rat_from_string(item.get<std::string>()));
    return XPoly(std::move(coeffs));
}

namespace {

json mpoly_to_json_obj(const MPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"exp", e}, {"coef", rat_to_string(c)}});
    return json{{"nvars", p.nvars()}, {"terms", terms}};
}

MPoly mpoly_from_json_obj(const json& j) {
    MPoly p(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("exp").get<std::vector<int>>(),
                   rat_from_string(term.at("coef").get<std::string>()));
    return p;
}

}  // namespace

std::string mpoly_to_json(const MPoly& p) { return mpoly_to_json_obj(p).dump(); }

MPoly mpoly_from_json(const std::string& text) { return mpoly_from_json_obj(parse(text)); }

std::string hypersurface_to_json(const Hypersurface& D) {
    json factors = json::array();
    for (const auto& [f, mult] : D.factors)
        factors.push_back(json{{"poly", mpoly_to_json_obj(f)}, {"mult", mult}});
    return dump(json{{"poly", mpoly_to_json_obj(D.poly)}, {"factors", factors}});
}

Hypersurface hypersurface_from_json(const std::string& text) {
    json j = parse(text);
    MPoly q = mpoly_from_json_obj(j.at("poly"));
    std::vector<std::pair<MPoly, int>> factors;
    for (const auto& f : j.value("factors", json::array()))
        factors.emplace_back(mpoly_from_json_obj(f.at("poly")), f.at("mult").get<int>());
    return Hypersurface(std::move(q), std::move(factors));
}

std::string fmt_to_csv(const FmtReport& rep) {
    std::ostringstream os;
    os << "r,m,N,T,deviation\n";
    os.precision(17);
    for (const FmtRow& row : rep.rows)
        os << row.r << "," << row.m << "," << row.N << "," << row.T << "," << row.deviation
           << "\n";
    return os.str();
}

std::string fmt_to_json(const FmtReport& rep, const Config& cfg, const RGrid& grid) {
    json rows = json::array();
    for (const FmtRow& row : rep.rows)
        rows.push_back(json{{"r", num(row.r)},
                            {"m", num(row.m)},
                            {"N", num(row.N)},
                            {"T", num(row.T)},
                            {"deviation", num(row.deviation)}});
    return dump(json{{"kind", "fmt"}, {"meta", grid_meta(cfg, grid)}, {"rows", rows}});
}

FmtReport fmt_from_json(const std::string& text) {
    json j = parse(text);
    if (j.value("kind", "") != "fmt") throw DomainError("fmt_from_json: wrong report kind");
    FmtReport rep;
    for (const auto& row : j.at("rows"))
        rep.rows.push_back({row.at("r").get<double>(), row.at("m").get<double>(),
                            row.at("N").get<double>(), row.at("T").get<double>(),
                            row.at("deviation").get<double>()});
    return rep;
}

std::string margin_to_csv(const smt::MarginReport& rep) {
    std::ostringstream os;
    os << "r,lhs,rhs,margin,margin_over_T\n";
    os.precision(17);
    for (const smt::MarginRow& row : rep.rows)
        os << row.r << "," << row.lhs << "," << row.rhs << "," << row.margin << ","
           << row.margin_over_T << "\n";
    return os.str();
}

std::string margin_to_json(const smt::MarginReport& rep, const Config& cfg,
                           const RGrid& grid) {
    json rows = json::array();
    for (const smt::MarginRow& row : rep.rows)
        rows.push_back(json{{"r", num(row.r)},
                            {"lhs", num(row.lhs)},
                            {"rhs", num(row.rhs)},
                            {"margin", num(row.margin)},
                            {"margin_over_T", num(row.margin_over_T)}});
    return dump(json{{"kind", "margin"},
                     {"theorem", rep.theorem},
                     {"meta", grid_meta(cfg, grid)},
                     {"notes", rep.notes},
                     {"rows", rows}});
}

smt::MarginReport margin_from_json(const std::string& text) {
    json j = parse(text);
    if (j.value("kind", "") != "margin") throw DomainError("margin_from_json: wrong kind");
    smt::MarginReport rep;
    rep.theorem = j.value("theorem", "");
    for (const auto& note : j.value("notes", json::array()))
        rep.notes.push_back(note.get<std::string>());
    for (const auto& row : j.at("rows"))
        rep.rows.push_back({row.at("r").get<double>(), row.at("lhs").get<double>(),
                            row.at("rhs").get<double>(), row.at("margin").get<double>(),
                            row.at("margin_over_T").get<double>()});
    return rep;
}

std::string decomposition_to_json(const decomp::Decomposition& dec,
                                  const decomp::StageTrace& trace) {
    json bins = json::array();
    for (const auto& bin : dec.bins) bins.push_back(bin);
    json stages = json::array();
    for (const decomp::StageRow& row : trace.rows)
        stages.push_back(json{{"k", row.k},
                              {"d", row.d},
                              {"s", row.s},
                              {"i_max", row.i_max},
                              {"i_min", row.i_min}});
    return dump(json{{"kind", "decomposition"},
                     {"bins", bins},
                     {"bin_degrees", dec.bin_degrees},
                     {"stages", stages}});
}

std::pair<decomp::Decomposition, decomp::StageTrace> decomposition_from_json(
    const std::string& text) {
    json j = parse(text);
    if (j.value("kind", "") != "decomposition")
        throw DomainError("decomposition_from_json: wrong kind");
    decomp::Decomposition dec;
    for (const auto& bin : j.at("bins")) dec.bins.push_back(bin.get<std::vector<int>>());
    dec.bin_degrees = j.at("bin_degrees").get<std::vector<int>>();
    decomp::StageTrace trace;
    for (const auto& row : j.at("stages"))
        trace.rows.push_back({row.at("k").get<int>(), row.at("d").get<int>(),
                              row.at("s").get<int>(), row.at("i_max").get<int>(),
                              row.at("i_min").get<int>()});
    return {std::move(dec), std::move(trace)};
}

std::string growth_to_csv(const nev::GrowthReport& rep) {
    std::ostringstream os;
    os << "r,quantity,T,ratio\n";
    os.precision(17);
    for (const nev::GrowthRow& row : rep.rows)
        os << row.r << "," << row.quantity << "," << row.T << "," << row.ratio << "\n";
    return os.str();
}

}  // namespace report
}  // namespace awnev
