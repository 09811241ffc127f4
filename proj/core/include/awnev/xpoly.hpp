#pragma once

#include <complex>
#include <string>
#include <vector>

#include "awnev/laurent.hpp"
#include "awnev/rational.hpp"

namespace awnev {

// Polynomial in x over Rat, coefficient index = power of x. The leading
// coefficient is nonzero unless the polynomial is zero (empty storage).
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize_(); }

    static XPoly zero() { return {}; }
    static XPoly constant(const Rat& c) { return XPoly({c}); }
    static XPoly x() { return XPoly({Rat(0), Rat(1)}); }
    static XPoly monomial(int k, const Rat& c);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)]
                                                         : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator*(const Rat& c) const;
    friend XPoly operator*(const Rat& c, const XPoly& p) { return p * c; }
    bool operator==(const XPoly&) const = default;

    XPoly derivative() const;
    XPoly pow(int e) const;

    std::complex<double> eval(const std::complex<double>& x) const;
    GaussRat eval_exact(const GaussRat& x) const;

    // Rendering: descending powers, exact rational coefficients.
    std::string str() const;

private:
    void normalize_() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// p((z + 1/z)/2) as a symmetric Laurent polynomial with span [-deg p, deg p].
SymLaurent to_symlaurent(const XPoly& p);

// Inverse of to_symlaurent: every symmetric Laurent polynomial is the z-model
// of a unique XPoly of degree max_exp.
XPoly from_symlaurent(const SymLaurent& g);

// Monic gcd over the rational field; gcd(0, 0) = 0.
XPoly xpoly_gcd(const XPoly& a, const XPoly& b);

// Largest m such that (x - x0)^m divides p, by exact synthetic division.
// Throws ZeroFunctionError for p == 0.
int order_at(const XPoly& p, const GaussRat& x0);

}  // namespace awnev
