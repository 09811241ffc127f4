#include "awnev/position.hpp"

#include <cmath>
#include <complex>
#include <functional>

#include "awnev/errors.hpp"
#include "awnev/wronskian.hpp"

namespace awnev {
namespace smt {

namespace {

// Visit every size-k subset of {0, ..., p-1}.
void for_each_subset(int p, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int start, int depth) {
        if (depth == k) return visit(idx);
        for (int i = start; i <= p - (k - depth); ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            if (!rec(i + 1, depth + 1)) return false;
        }
        return true;
    };
    rec(0, 0);
}

bool subsets_have_full_rank(const HyperplaneSet& H, int n, int subset_size) {
    bool all_ok = true;
    for_each_subset(H.count(), subset_size, [&](const std::vector<int>& idx) {
        std::vector<std::vector<Rat>> m;
        m.reserve(idx.size());
        for (int i : idx) m.push_back(H.forms[static_cast<std::size_t>(i)]);
        if (wron::exact_rank(std::move(m)) != n + 1) {
            all_ok = false;
            return false;  // stop early
        }
        return true;
    });
    return all_ok;
}

// Dehomogenization Q(1, u) of a binary form, plus divisibility by x0.
std::vector<Rat> binary_dehomogenize(const MPoly& q, bool& divisible_by_x0) {
    int d = q.total_degree();
    std::vector<Rat> out(static_cast<std::size_t>(d) + 1, Rat(0));
    for (const auto& [e, c] : q.terms()) out[static_cast<std::size_t>(e[1])] = c;
    divisible_by_x0 = out[static_cast<std::size_t>(d)] == 0;
    dense::normalize(out);
    return out;
}

// Binary forms with rational coefficients share a projective zero iff the
// gcd of their dehomogenizations is nonconstant or all carry the x0 factor
// (Euclid's gcd does not change under field extension).
bool binary_subset_misses_common_zero(const std::vector<Hypersurface>& Ds,
                                      const std::vector<int>& idx) {
    bool all_div_x0 = true;
    std::vector<Rat> common;
    bool first = true;
    for (int i : idx) {
        bool div0 = false;
        std::vector<Rat> de = binary_dehomogenize(Ds[static_cast<std::size_t>(i)].poly, div0);
        all_div_x0 = all_div_x0 && div0;
        common = first ? de : dense::gcd(common, de);
        first = false;
    }
    return !all_div_x0 && dense::degree(common) <= 0;
}

}  // namespace

bool general_position_check(const HyperplaneSet& H, int n) {
    if (H.count() < n + 1) throw TooFew("general_position_check: need at least n+1 forms");
    if (H.ambient_vars() != n + 1)
        throw BadArity("general_position_check: forms have wrong length");
    return subsets_have_full_rank(H, n, n + 1);
}

bool subgeneral_position_check(const HyperplaneSet& H, int n, int l) {
    if (l < n) throw DomainError("subgeneral_position_check: need l >= n");
    if (H.count() < l + 1) throw TooFew("subgeneral_position_check: need at least l+1 forms");
    if (H.ambient_vars() != n + 1)
        throw BadArity("subgeneral_position_check: forms have wrong length");
    return subsets_have_full_rank(H, n, l + 1);
}

PositionResult hypersurface_position_check(const std::vector<Hypersurface>& Ds, int n, int l) {
    if (l < n) throw DomainError("hypersurface_position_check: need l >= n");
    const int p = static_cast<int>(Ds.size());
    if (p < l + 1) throw TooFew("hypersurface_position_check: need at least l+1 hypersurfaces");
    for (const Hypersurface& D : Ds)
        if (D.poly.nvars() != n + 1)
            throw BadArity("hypersurface_position_check: wrong variable count");

    bool all_linear = true;
    for (const Hypersurface& D : Ds) all_linear = all_linear && D.degree == 1;
    if (all_linear) {
        std::vector<std::vector<Rat>> rows;
        for (const Hypersurface& D : Ds) {
            std::vector<Rat> row(static_cast<std::size_t>(n) + 1, Rat(0));
            for (const auto& [e, c] : D.poly.terms())
                for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
                    if (e[i] == 1) row[i] = c;
            rows.push_back(std::move(row));
        }
        return {subgeneral_position_check(HyperplaneSet(rows), n, l), true};
    }

    if (n == 1) {
        // Points on the line: every (l+1)-subset must have an empty common
        // zero set, i.e. a constant gcd across the whole subset.
        bool ok = true;
        for_each_subset(p, l + 1, [&](const std::vector<int>& idx) {
            if (!binary_subset_misses_common_zero(Ds, idx)) {
                ok = false;
                return false;
            }
            return true;
        });
        return {ok, true};
    }

    // Heuristic sampling: look for a near-common zero of some (l+1)-subset
    // on a deterministic point cloud; finding one refutes the position.
    bool ok = true;
    for_each_subset(p, l + 1, [&](const std::vector<int>& idx) {
        std::uint64_t seed = 0x9e3779b97f4a7c15ull;
        auto next = [&seed]() {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            return static_cast<double>(seed % 2000001) / 1000000.0 - 1.0;
        };
        for (int trial = 0; trial < 512; ++trial) {
            std::vector<std::complex<double>> x(static_cast<std::size_t>(n) + 1);
            double norm = 0.0;
            for (auto& xi : x) {
                xi = {next(), next()};
                norm = std::max(norm, std::abs(xi));
            }
            if (norm < 0.1) continue;
            bool all_small = true;
            for (int i : idx) {
                const Hypersurface& D = Ds[static_cast<std::size_t>(i)];
                double scale = std::pow(norm, D.degree);
                if (std::abs(D.poly.eval(x)) > 1e-9 * scale) {
                    all_small = false;
                    break;
                }
            }
            if (all_small) {
                ok = false;
                return false;
            }
        }
        return true;
    });
    return {ok, false};
}

bool algebraically_nondegenerate(const ProjCurveRep& curve, int max_relation_degree) {
    const int n = curve.dim();
    if (n == 0) return !curve.components[0].is_zero();
    for (int D = 1; D <= max_relation_degree; ++D) {
        // All monomials f_0^{a_0} ... f_n^{a_n} with |a| = D; a dependence
        // among them is a homogeneous relation of degree D.
        std::vector<XPoly> products;
        std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == n) {
                exps[static_cast<std::size_t>(var)] = left;
                XPoly prod = XPoly::constant(Rat(1));
                for (std::size_t i = 0; i < exps.size(); ++i)
                    prod = prod * curve.components[i].pow(exps[i]);
                products.push_back(std::move(prod));
                return;
            }
            for (int e = 0; e <= left; ++e) {
                exps[static_cast<std::size_t>(var)] = e;
                rec(var + 1, left - e);
            }
        };
        rec(0, D);
        if (!wron::linearly_independent(products)) return false;
    }
    return true;
}

}  // namespace smt
}  // namespace awnev
