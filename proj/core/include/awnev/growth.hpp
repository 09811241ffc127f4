#pragma once

#include <string>
#include <vector>

#include "awnev/operators.hpp"
#include "awnev/quadrature.hpp"

namespace awnev {
namespace nev {

enum class GrowthKind { ld_dq, ld_avg, shift_N };

std::string growth_kind_name(GrowthKind k);

struct GrowthRow {
    double r;
    double quantity;  // sampled m(...) or counting difference
    double T;         // T(r, f)
    double ratio;     // quantity / (T / log log r); 0 when T vanishes
};

// Empirical sampling report; no pass/fail verdict is attached because the
// exceptional set of the underlying estimates is not computable.
struct GrowthReport {
    GrowthKind kind;
    int n;
    std::vector<GrowthRow> rows;
};

// Samples, over the grid,
//   ld_dq:   m(r, D_q^n f / f)
//   ld_avg:  m(r, A_{q^n} f / f)
//   shift_N: max over both signs of |N(r, 1/eta^{+-1} f) - N(r, 1/f)|
// against T(r, f) / log log r. Grid radii must clear guard_radius(n).
GrowthReport growth_trend(const RatFunc& f, GrowthKind kind, int n, const RGrid& grid,
                          const AwContext& ctx, double cluster_tol = 1e-8);

}  // namespace nev
}  // namespace awnev
