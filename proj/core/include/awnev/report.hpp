#pragma once

#include <string>
#include <vector>

#include "awnev/config.hpp"
#include "awnev/decompose.hpp"
#include "awnev/growth.hpp"
#include "awnev/quadrature.hpp"
#include "awnev/smt_harness.hpp"

namespace awnev {
namespace report {

// XPoly <-> JSON array of "num/den" strings, lowest degree first.
std::string xpoly_to_json(const XPoly& p);
XPoly xpoly_from_json(const std::string& json);

// MPoly object form: {"nvars": n, "terms": [{"exp": [..], "coef": "a/b"}]}.
std::string mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const std::string& json);

// Hypersurface: {"poly": MPOLY, "factors": [{"poly": MPOLY, "mult": m}]}.
std::string hypersurface_to_json(const Hypersurface& D);
Hypersurface hypersurface_from_json(const std::string& json);

// FMT ledger. The JSON variant carries the full metadata (s, q, grid,
// tolerances); CSV is the plain column dump "r,m,N,T,deviation".
std::string fmt_to_csv(const FmtReport& rep);
std::string fmt_to_json(const FmtReport& rep, const Config& cfg, const RGrid& grid);
FmtReport fmt_from_json(const std::string& json);

// Margin ledger; CSV columns "r,lhs,rhs,margin,margin_over_T".
std::string margin_to_csv(const smt::MarginReport& rep);
std::string margin_to_json(const smt::MarginReport& rep, const Config& cfg, const RGrid& grid);
smt::MarginReport margin_from_json(const std::string& json);

// Decomposition plus stage trace.
std::string decomposition_to_json(const decomp::Decomposition& dec,
                                  const decomp::StageTrace& trace);
std::pair<decomp::Decomposition, decomp::StageTrace> decomposition_from_json(
    const std::string& json);

// Growth trend rows; CSV columns "r,quantity,T,ratio".
std::string growth_to_csv(const nev::GrowthReport& rep);

}  // namespace report
}  // namespace awnev
