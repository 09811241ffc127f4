#include "awnev/xpoly.hpp"

#include <sstream>

namespace awnev {

XPoly XPoly::monomial(int k, const Rat& c) {
    if (c == 0 || k < 0) return {};
    std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return XPoly(std::move(v));
}

XPoly XPoly::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& c : v) c = -c;
    return XPoly(std::move(v));
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<Rat> v = a.c_;
    if (v.size() < b.c_.size()) v.resize(b.c_.size(), Rat(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return XPoly(std::move(v));
}

XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

XPoly operator*(const XPoly& a, const XPoly& b) {
    return XPoly(dense::mul(a.c_, b.c_));
}

XPoly XPoly::operator*(const Rat& c) const {
    if (c == 0) return {};
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= c;
    return XPoly(std::move(v));
}

XPoly XPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long long>(i));
    return XPoly(std::move(v));
}

XPoly XPoly::pow(int e) const {
    if (e < 0) throw DomainError("XPoly: negative power");
    XPoly acc = XPoly::constant(Rat(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::complex<double> XPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

GaussRat XPoly::eval_exact(const GaussRat& x) const {
    GaussRat acc{Rat(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + GaussRat(*it);
    return acc;
}

std::string XPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& v = c_[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        Rat a = rat_abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool unit = a == 1 && k != 0;
        if (!unit) os << rat_to_string(a);
        if (k != 0) {
            if (!unit) os << " * ";
            os << "x";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

SymLaurent to_symlaurent(const XPoly& p) {
    Laurent acc;
    Laurent xm = Laurent::x_model();
    Laurent power = Laurent::constant(Rat(1));
    for (int k = 0; k <= p.degree(); ++k) {
        acc = acc + power * p.coeff(k);
        power = power * xm;
    }
    return SymLaurent(acc);
}

XPoly from_symlaurent(const SymLaurent& g) {
    Laurent rem = g.laurent();
    std::vector<Rat> coeffs;
    if (rem.is_zero()) return XPoly();
    coeffs.assign(static_cast<std::size_t>(rem.max_exp()) + 1, Rat(0));
    while (!rem.is_zero() && rem.max_exp() > 0) {
        long long k = rem.max_exp();
        // to_symlaurent(x^k) has leading z^k coefficient 2^{-k}
        Rat ck = rem.coeff(k) * rat_pow(Rat(2), k);
        coeffs[static_cast<std::size_t>(k)] = ck;
        rem = rem - to_symlaurent(XPoly::monomial(static_cast<int>(k), ck)).laurent();
    }
    if (!rem.is_zero()) coeffs[0] = rem.coeff(0);
    return XPoly(std::move(coeffs));
}

XPoly xpoly_gcd(const XPoly& a, const XPoly& b) {
    return XPoly(dense::gcd(a.coeffs(), b.coeffs()));
}

int order_at(const XPoly& p, const GaussRat& x0) {
    if (p.is_zero()) throw ZeroFunctionError("order_at: zero polynomial");
    // Repeated synthetic division by (x - x0) over Gaussian rationals.
    std::vector<GaussRat> cur(p.coeffs().size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = GaussRat(p.coeffs()[i]);
    int order = 0;
    while (cur.size() > 1) {
        std::vector<GaussRat> quot(cur.size() - 1);
        GaussRat carry = cur.back();
        quot[cur.size() - 2] = carry;
        for (std::size_t i = cur.size() - 1; i-- > 1;) {
            carry = cur[i] + x0 * carry;
            quot[i - 1] = carry;
        }
        GaussRat rem = cur[0] + x0 * carry;
        if (!rem.is_zero()) return order;
        ++order;
        cur = std::move(quot);
    }
    return order;
}

}  // namespace awnev
