#include "awnev/smt_params.hpp"

#include <sstream>

#include "awnev/errors.hpp"

namespace awnev {
namespace smt {

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("RatInterval: lo > hi");
}

RatInterval RatInterval::mul_nonneg(const RatInterval& o) const {
    if (lo < 0 || o.lo < 0) throw DomainError("RatInterval: mul_nonneg needs nonnegative operands");
    return {lo * o.lo, hi * o.hi};
}

RatInterval RatInterval::pow_nonneg(int e) const {
    if (e < 0) throw DomainError("RatInterval: negative power");
    RatInterval acc = point(Rat(1));
    for (int i = 0; i < e; ++i) acc = acc.mul_nonneg(*this);
    return acc;
}

RatInterval euler_e() {
    // First 50 decimal digits of e; truncation < e < truncation + 10^-50.
    static const char* digits = "271828182845904523536028747135266249775724709369995";
    Int num(digits);
    Int den = 1;
    for (int i = 0; i < 50; ++i) den *= 10;
    Rat lo(num, den);
    return {lo, lo + Rat(Int(1), den)};
}

Int floor_certified(const RatInterval& iv) {
    Int flo = rat_floor(iv.lo);
    Int fhi = rat_floor(iv.hi);
    if (flo != fhi)
        throw CertificationError("floor_certified: enclosure straddles an integer");
    return flo;
}

namespace {

Rat bound_ratio(int d, int s, int s_prime) {
    // max{d - s + 1, ceil(d/s')} as an exact rational over d is assembled by
    // the callers; here just the integer cap.
    int cap = std::max(d - s + 1, (d + s_prime - 1) / s_prime);
    return Rat(cap);
}

}  // namespace

SmtParams compute_certificates(int n, const Int& dhat, const Rat& alpha, const Rat& eps,
                               std::optional<Int> d_opt, std::optional<Rat> beta_opt) {
    if (n < 1) throw DomainError("compute_certificates: n must be positive");
    if (dhat < 1) throw DomainError("compute_certificates: dhat must be positive");
    if (eps <= 0) throw DomainError("compute_certificates: eps must be positive");
    if (alpha < 0) throw DomainError("compute_certificates: alpha must be nonnegative");

    SmtParams out;
    out.n = n;
    out.dhat = dhat;
    out.d = d_opt.value_or(dhat);
    out.alpha = alpha;
    out.beta = beta_opt.value_or(Rat(1));
    out.eps = eps;
    out.hypothesis_ok = out.beta * (alpha + 1) >= alpha;

    const Int np1(n + 1);
    const Int ceil_a1 = rat_ceil(alpha + 1);
    const Int ceil_inv_eps = rat_ceil(Rat(1) / eps);

    out.N = ceil_a1 * np1 * np1 * np1 * dhat * ceil_inv_eps + np1 * dhat;
    out.M = int_binomial(out.N + n, Int(n));
    // Omega = N (N - dhat) ... (N - n dhat) / (dhat (n+1)!) = dhat^n C(N/dhat, n+1)
    Int q = out.N / dhat;
    Int dhat_pow = 1;
    for (int i = 0; i < n; ++i) dhat_pow *= dhat;
    out.Omega = dhat_pow * int_binomial(q, np1);

    // 4 (e ceil(alpha+1) (n+1)^2 d! ceil(1/eps))^n, enclosed.
    Rat c = Rat(ceil_a1) * Rat(np1 * np1) * Rat(int_factorial(out.d)) * Rat(ceil_inv_eps);
    RatInterval base = euler_e().mul_nonneg(RatInterval::point(c));
    RatInterval m1_interval = base.pow_nonneg(n).mul_nonneg(RatInterval::point(Rat(4)));
    out.M1 = floor_certified({m1_interval.lo - 1, m1_interval.hi - 1});

    // N M / (dhat Omega) <= (n+1) + eps/(alpha+1), exactly.
    Rat lhs = Rat(out.N * out.M) / Rat(dhat * out.Omega);
    Rat rhs = Rat(np1) + eps / (alpha + 1);
    out.nm_certificate = lhs <= rhs;
    // M below the certified lower edge of the enclosure suffices.
    out.m_bound_certificate = Rat(out.M) <= m1_interval.lo;
    if (!out.m_bound_certificate && Rat(out.M) <= m1_interval.hi)
        throw CertificationError("compute_certificates: M bound undecidable at 50 digits");
    return out;
}

SmtParams compute_smt_params(int n, int l, const std::vector<int>& dj,
                             const std::vector<int>& sj, int s_prime, const Rat& eps,
                             std::optional<Int> dhat_override) {
    if (l < n) throw DomainError("compute_smt_params: need l >= n");
    if (dj.empty() || dj.size() != sj.size())
        throw BadArity("compute_smt_params: degree and factor-count lists must match");
    int min_sj = sj[0];
    for (std::size_t j = 0; j < dj.size(); ++j) {
        if (dj[j] < 1) throw DomainError("compute_smt_params: degrees must be >= 1");
        if (sj[j] < 1 || sj[j] > dj[j])
            throw DomainError("compute_smt_params: factor counts must lie in [1, d_j]");
        min_sj = std::min(min_sj, sj[j]);
    }
    if (s_prime < 1 || s_prime > std::min(n, min_sj))
        throw DomainError("compute_smt_params: need 1 <= s' <= min{n, min s_j}");

    Int d = 1;
    for (int e : dj) d = int_lcm(d, Int(e));
    const int d_int = static_cast<int>(d.convert_to<long long>());

    // alpha = max_j cap(d_j, s_j) / d_j * (l - n);
    // beta = alpha d / (max_j cap(d, s_j) (l - n)). With l == n both
    // weights vanish from the theorem; alpha = 0 and beta = 1 by convention.
    Rat alpha(0);
    Rat beta(1);
    if (l > n) {
        Rat ratio(0);
        for (std::size_t j = 0; j < dj.size(); ++j)
            ratio = std::max(ratio, bound_ratio(dj[j], sj[j], s_prime) / Rat(dj[j]));
        alpha = ratio * Rat(l - n);
        Rat cap_max(0);
        for (std::size_t j = 0; j < dj.size(); ++j)
            cap_max = std::max(cap_max, bound_ratio(d_int, sj[j], s_prime));
        beta = alpha * Rat(d) / (cap_max * Rat(l - n));
    }

    Int dhat;
    if (dhat_override) {
        dhat = *dhat_override;
        if (dhat % d != 0)
            throw DomainError("compute_smt_params: dhat override must be divisible by d");
    } else {
        // lcm{1..d} is a common multiple of every admissible bin degree.
        dhat = 1;
        for (Int i = 2; i <= d; ++i) dhat = int_lcm(dhat, i);
    }

    SmtParams out = compute_certificates(n, dhat, alpha, eps, d, beta);
    out.l = l;
    out.p = static_cast<int>(dj.size());
    out.s_prime = s_prime;
    out.dj = dj;
    out.sj = sj;
    return out;
}

bool verify_binomial_bound(int n, int grid_points) {
    if (n < 1 || grid_points < 2) throw DomainError("verify_binomial_bound: bad arguments");
    Rat top(1, static_cast<long long>(n) * (n + 1));
    for (int i = 0; i <= grid_points; ++i) {
        Rat y = top * Rat(i, grid_points);
        Rat lhs = rat_pow(1 + y, n);
        Rat rhs = 1 + Rat(n + 1) * y;
        if (lhs > rhs) return false;
    }
    return true;
}

std::string SmtParams::summary() const {
    std::ostringstream os;
    os << "n=" << n;
    if (l > 0) os << " l=" << l;
    if (p > 0) os << " p=" << p;
    os << " s'=" << s_prime << " d=" << d.str() << " dhat=" << dhat.str()
       << " alpha=" << rat_to_string(alpha) << " beta=" << rat_to_string(beta)
       << " eps=" << rat_to_string(eps) << "\n";
    os << "N=" << N.str() << " M=" << M.str() << " Omega=" << Omega.str()
       << " M1=" << M1.str() << "\n";
    os << "hypothesis beta(alpha+1)>=alpha: " << (hypothesis_ok ? "holds" : "FAILS") << "\n";
    os << "certificate NM/(dhat Omega) <= (n+1)+eps/(alpha+1): "
       << (nm_certificate ? "holds" : "FAILS") << "\n";
    os << "certificate M <= 4(e ceil(alpha+1)(n+1)^2 d! ceil(1/eps))^n: "
       << (m_bound_certificate ? "holds" : "FAILS");
    return os.str();
}

}  // namespace smt
}  // namespace awnev
