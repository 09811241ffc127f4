#include "awnev/truncated.hpp"

#include <cmath>
#include <limits>

#include "awnev/errors.hpp"

namespace awnev {
namespace nev {

namespace {

constexpr int kOrderInf = std::numeric_limits<int>::max();

void check_guard(const std::vector<GaussRat>& zs, int M, const AwContext& ctx) {
    Rat guard2 = rat_pow(ctx.guard_radius_exact(M), 2);
    for (const GaussRat& z : zs)
        if (!(z.norm2() > guard2))
            throw GuardViolation("query point |z| <= guard radius s^-" + std::to_string(M));
}

// Vanishing order with the zero function counted as +infinity.
int order_or_inf(const RatFunc& f, const GaussRat& z0) {
    if (f.is_zero()) return kOrderInf;
    return zero_order_at(f, z0);
}

int order_or_inf(const XPoly& p, const GaussRat& x0) {
    if (p.is_zero()) return kOrderInf;
    return order_at(p, x0);
}

}  // namespace

int trunc_classical(const XPoly& f, const Rat& a, int M, const std::vector<GaussRat>& xs) {
    if (M < 1) throw DomainError("trunc_classical: M must be positive");
    XPoly g = f - XPoly::constant(a);
    if (g.is_zero()) throw ZeroFunctionError("trunc_classical: f - a vanishes identically");
    int acc = 0;
    for (const GaussRat& x : xs) acc += std::min(order_at(g, x), M);
    return acc;
}

int mixed_min_order(const RatFunc& f, int M, const GaussRat& z0, const AwContext& ctx) {
    int best = kOrderInf;
    for (int t = 0; t <= M; ++t) {
        best = std::min(best, order_or_inf(ops::mixed(f, M, t, ctx), z0));
        if (best == 0) break;
    }
    return best;
}

int shifted_min_order(const RatFunc& f, long long M, const GaussRat& z0,
                      const AwContext& ctx) {
    if (f.is_zero()) return kOrderInf;
    if (z0.is_zero()) throw DomainError("shifted_min_order: z0 must be nonzero");
    // order of eta^{M-2t} f at z0 == order of f at s^{M-2t} z0. The shift
    // exponents k = M - 2t are visited by increasing |k|: the numerator has
    // at most span distinct roots, so span+1 distinct probes must contain a
    // non-zero and the scan exits there with minimum 0. This keeps the
    // exact scale factors small and makes huge M affordable.
    const long long span = f.num().is_constant() ? 0 : f.num().span();
    const long long cap = span + 1;
    std::vector<long long> ks;
    for (long long a = M % 2; a <= M && static_cast<long long>(ks.size()) < cap; a += 2) {
        if (a == 0) {
            ks.push_back(0);
            continue;
        }
        ks.push_back(a);
        if (static_cast<long long>(ks.size()) < cap) ks.push_back(-a);
    }
    int best = kOrderInf;
    for (long long k : ks) {
        Rat factor = rat_pow(ctx.s, k);
        GaussRat w{factor * z0.re, factor * z0.im};
        if (!f.den().is_constant() && f.den().eval_exact(w).is_zero()) return 0;  // pole
        if (!f.num().eval_exact(w).is_zero()) return 0;
        best = std::min(best, order_at(f.num(), w));
    }
    if (static_cast<long long>(ks.size()) == static_cast<long long>(M) + 1) return best;
    throw Error("shifted_min_order: shift orbit hit more zeros than the span allows");
}

int trunc_aw_M(const RatFunc& f, const Rat& a, int M, const std::vector<GaussRat>& zs,
               const AwContext& ctx, bool use_shift_form) {
    if (M < 1) throw DomainError("trunc_aw_M: M must be positive");
    check_guard(zs, M, ctx);
    RatFunc g = f - RatFunc::constant(a);
    if (g.is_zero()) throw ZeroFunctionError("trunc_aw_M: f - a vanishes identically");
    if (!use_shift_form && M > 8)
        throw TooLarge("trunc_aw_M: definition route capped at M = 8; use the shift form");
    RatFunc shifted = ops::shift(g, delta_of(M), ctx);
    int acc = 0;
    for (const GaussRat& z : zs) {
        int lead = order_or_inf(shifted, z);
        int credit = use_shift_form ? shifted_min_order(g, M, z, ctx)
                                    : mixed_min_order(g, M, z, ctx);
        acc += lead - credit;
    }
    return acc;
}

CfCount trunc_aw_cf(const RatFunc& f, const Rat& a, const std::vector<GaussRat>& zs,
                    const AwContext& ctx) {
    check_guard(zs, 2, ctx);
    RatFunc g = f - RatFunc::constant(a);
    if (g.is_zero()) throw ZeroFunctionError("trunc_aw_cf: f - a vanishes identically");
    RatFunc eta_dq = ops::shift(ops::aw_diff(g, ctx), 1, ctx);
    RatFunc eta2 = ops::shift(g, 2, ctx);
    CfCount out{0, 0};
    for (const GaussRat& z : zs) {
        int base = order_or_inf(g, z);
        out.value += base - std::min(base, order_or_inf(eta_dq, z));
        out.eta2_variant += base - std::min(base, order_or_inf(eta2, z));
    }
    return out;
}

bool verify_lemma53(const RatFunc& f, int M, const std::vector<GaussRat>& zs,
                    const AwContext& ctx) {
    if (M < 1) throw DomainError("verify_lemma53: M must be positive");
    check_guard(zs, M, ctx);
    for (const GaussRat& z : zs)
        if (mixed_min_order(f, M, z, ctx) != shifted_min_order(f, M, z, ctx)) return false;
    return true;
}

bool verify_order_superadditivity(const std::vector<XPoly>& factors, int M,
                                  const std::vector<GaussRat>& zs, const AwContext& ctx) {
    if (factors.empty()) throw BadArity("verify_order_superadditivity: no factors");
    if (M < 1) throw DomainError("verify_order_superadditivity: M must be positive");
    check_guard(zs, M, ctx);
    const int m = static_cast<int>(factors.size());

    std::vector<RatFunc> zmodels;
    XPoly product = XPoly::constant(Rat(1));
    for (const XPoly& p : factors) {
        zmodels.push_back(RatFunc::from(p));
        product = product * p;
    }
    RatFunc product_z = RatFunc::from(product);

    for (const GaussRat& z : zs) {
        // AW side: the product dominates the factor sum.
        long long lhs = mixed_min_order(product_z, M, z, ctx);
        long long sum = 0;
        for (const RatFunc& g : zmodels) sum += mixed_min_order(g, M, z, ctx);
        if (lhs < sum) return false;

        // Classical chain at the x-image, with exact derivatives.
        GaussRat x0 = x_of_z(z);
        auto min_deriv_order = [&](const XPoly& p, int upto) {
            XPoly d = p;
            int best = kOrderInf;
            for (int t = 0; t <= upto; ++t) {
                best = std::min(best, order_or_inf(d, x0));
                if (best == 0) break;
                d = d.derivative();
            }
            return best;
        };
        long long mid = 0;
        for (const XPoly& p : factors) mid += min_deriv_order(p, M);
        long long upper = min_deriv_order(product, M);
        long long lower = min_deriv_order(product, m * M);
        if (!(upper >= mid && mid >= lower)) return false;
    }
    return true;
}

GaussRat x_of_z(const GaussRat& z) {
    return Rat(1, 2) * (z + z.inverse());
}

double integrated_from_points(const std::vector<std::pair<GaussRat, int>>& z_counts,
                              double r) {
    std::vector<std::pair<double, int>> mods;
    int origin = 0;
    for (const auto& [z, count] : z_counts) {
        if (count == 0) continue;
        if (count < 0) throw DomainError("integrated_from_points: negative count");
        GaussRat x = x_of_z(z);
        double mod = std::sqrt(to_double(x.norm2()));
        if (mod == 0.0) {
            origin += count;
        } else {
            mods.emplace_back(mod, count);
        }
    }
    return counting_N(ZeroList(std::move(mods), origin), r);
}

}  // namespace nev
}  // namespace awnev
