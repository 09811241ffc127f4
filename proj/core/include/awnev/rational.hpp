#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "awnev/errors.hpp"

namespace awnev {

// Exact arbitrary-precision scalars. cpp_rational keeps gcd(num, den) = 1
// and den > 0 as class invariants, which is exactly the canonical form we
// need for coefficient comparison.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const Int& i) { return i.convert_to<double>(); }

// Parses "a" or "a/b" with optional sign. Whitespace is not accepted.
Rat rat_from_string(const std::string& text);

// "a" when the denominator is 1, otherwise "a/b".
std::string rat_to_string(const Rat& r);

// r^k for integer k (k < 0 requires r != 0).
Rat rat_pow(const Rat& r, long long k);

Rat rat_abs(const Rat& r);

// Smallest integer >= r and largest integer <= r.
Int rat_ceil(const Rat& r);
Int rat_floor(const Rat& r);

Int int_factorial(const Int& n);
Int int_binomial(const Int& n, const Int& k);
Int int_lcm(const Int& a, const Int& b);

// Exact Gaussian rational point a + b*i. Supports the field operations,
// which is all exact vanishing-order queries need.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Rat norm2() const { return re * re + im * im; }

    GaussRat conj() const { return {re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator*(const Rat& c, const GaussRat& a) {
        return {c * a.re, c * a.im};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }

    GaussRat inverse() const {
        if (is_zero()) throw ZeroDenominatorError("GaussRat: inverse of zero");
        Rat n = norm2();
        return {re / n, -im / n};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        return a * b.inverse();
    }

    std::complex<double> to_complex() const {
        return {to_double(re), to_double(im)};
    }
};

std::string gauss_to_string(const GaussRat& g);

}  // namespace awnev
