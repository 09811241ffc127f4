#include "awnev/ratfunc.hpp"

#include "awnev/errors.hpp"

namespace awnev {

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroDenominatorError("RatFunc: zero denominator");
    reduce_();
}

void RatFunc::reduce_() {
    if (num_.is_zero()) {
        den_ = Laurent::constant(Rat(1));
        return;
    }
    if (den_.terms().size() == 1) {
        // Monomial denominator: nothing to cancel, just shift and rescale.
        long long k = den_.min_exp();
        Rat lead = den_.coeff(k);
        num_ = num_.shifted_exp(-k) * (Rat(1) / lead);
        den_ = Laurent::constant(Rat(1));
        return;
    }
    // Cancel the polynomial gcd of the z^{-min} parts; monomial factors are
    // handled by the exponent normalization below.
    std::vector<Rat> dn = num_.dense();
    std::vector<Rat> dd = den_.dense();
    std::vector<Rat> g = dense::gcd(dn, dd);
    if (dense::degree(g) > 0) {
        dn = dense::divmod(dn, g).first;
        dd = dense::divmod(dd, g).first;
    }
    // The stripped quotients keep nonzero constant terms (z cannot divide
    // the gcd), so placing den at exponent 0 and num at the exponent offset
    // of the original pair is the canonical choice.
    long long off = num_.min_exp() - den_.min_exp();
    num_ = Laurent::from_dense(dn, off);
    den_ = Laurent::from_dense(dd, 0);
    // Monic denominator (leading coefficient 1).
    Rat lead = den_.coeff(den_.max_exp());
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw ZeroDenominatorError("RatFunc: division by zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator*(const Rat& c) const {
    RatFunc r = *this;
    r.num_ = r.num_ * c;
    if (c == 0) r.den_ = Laurent::constant(Rat(1));
    return r;
}

RatFunc RatFunc::scaled_arg(const Rat& c) const {
    return RatFunc(num_.scaled_arg(c), den_.scaled_arg(c));
}

std::string RatFunc::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace awnev
