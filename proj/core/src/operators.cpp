#include "awnev/operators.hpp"

#include "awnev/errors.hpp"

namespace awnev {

AwContext::AwContext(Rat s_half) : s(std::move(s_half)) {
    if (!(s > 0 && s < 1)) throw DomainError("AwContext: s must lie in (0, 1)");
}

namespace ops {

RatFunc shift(const RatFunc& f, long long k, const AwContext& ctx) {
    if (k == 0) return f;
    return f.scaled_arg(rat_pow(ctx.s, k));
}

RatFunc dq_denominator(const AwContext& ctx) {
    Rat c = (ctx.s - Rat(1) / ctx.s) / 2;
    Laurent d;
    d.add_term(1, c);
    d.add_term(-1, -c);
    return RatFunc::from(d);
}

RatFunc aw_diff(const RatFunc& f, const AwContext& ctx) {
    return (shift(f, 1, ctx) - shift(f, -1, ctx)) / dq_denominator(ctx);
}

RatFunc aw_diff_iter(const RatFunc& f, int t, const AwContext& ctx) {
    if (t < 0) throw DomainError("aw_diff_iter: negative iterate");
    RatFunc g = f;
    for (int i = 0; i < t; ++i) g = aw_diff(g, ctx);
    return g;
}

RatFunc aw_avg(const RatFunc& f, int n, const AwContext& ctx) {
    if (n < 0) throw DomainError("aw_avg: negative order");
    if (n == 0) return f;
    return (shift(f, n, ctx) + shift(f, -n, ctx)) * Rat(1, 2);
}

RatFunc mixed(const RatFunc& f, int M, int t, const AwContext& ctx) {
    if (t < 0 || t > M) throw DomainError("mixed: need 0 <= t <= M");
    return aw_avg(aw_diff_iter(f, t, ctx), M - t, ctx);
}

bool verify_product_rule(const RatFunc& f, const RatFunc& g, const AwContext& ctx) {
    RatFunc lhs = aw_diff(f * g, ctx);
    RatFunc rhs = aw_avg(f, 1, ctx) * aw_diff(g, ctx) + aw_avg(g, 1, ctx) * aw_diff(f, ctx);
    return lhs == rhs;
}

bool verify_quotient_rule(const RatFunc& f, const RatFunc& g, const AwContext& ctx) {
    if (g.is_zero()) throw ZeroDenominatorError("quotient rule: g must not vanish identically");
    RatFunc lhs = aw_diff(f / g, ctx);
    RatFunc rhs = (aw_avg(g, 1, ctx) * aw_diff(f, ctx) - aw_avg(f, 1, ctx) * aw_diff(g, ctx)) /
                  (shift(g, 1, ctx) * shift(g, -1, ctx));
    return lhs == rhs;
}

}  // namespace ops

}  // namespace awnev
