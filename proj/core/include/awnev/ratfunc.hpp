#pragma once

#include <complex>
#include <string>

#include "awnev/laurent.hpp"
#include "awnev/xpoly.hpp"

namespace awnev {

// Reduced quotient of Laurent polynomials in z. Canonical form makes
// equality decidable by coefficient comparison:
//   - num and den share no nonconstant polynomial factor,
//   - den has min-exponent 0 and leading (highest-exponent) coefficient 1,
//   - the zero function is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Laurent::constant(Rat(1))) {}
    RatFunc(Laurent num, Laurent den);

    static RatFunc from(Laurent g) { return RatFunc(std::move(g), Laurent::constant(Rat(1))); }
    static RatFunc from(const SymLaurent& g) { return from(g.laurent()); }
    static RatFunc from(const XPoly& p) { return from(to_symlaurent(p).laurent()); }
    static RatFunc constant(const Rat& c) { return from(Laurent::constant(c)); }
    // z-model of the identity map x.
    static RatFunc x_model() { return from(Laurent::x_model()); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the denominator is the constant 1.
    bool is_laurent() const { return den_.is_constant(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator*(const Rat& c) const;
    bool operator==(const RatFunc&) const = default;

    // z -> c*z on numerator and denominator; c nonzero.
    RatFunc scaled_arg(const Rat& c) const;

    std::complex<double> eval(const std::complex<double>& z) const {
        return num_.eval(z) / den_.eval(z);
    }
    // |den(z)|, used by quadrature to detect near-singular nodes.
    double den_magnitude(const std::complex<double>& z) const {
        return std::abs(den_.eval(z));
    }

    std::string str() const;

private:
    void reduce_();
    Laurent num_;
    Laurent den_;
};

}  // namespace awnev
