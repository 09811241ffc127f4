#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "awnev/rational.hpp"

namespace awnev {

// Laurent polynomial in z over Rat, finitely supported. Stored coefficients
// are nonzero; the zero polynomial has empty support.
class Laurent {
public:
    Laurent() = default;

    static Laurent zero() { return {}; }
    static Laurent constant(const Rat& c) { return monomial(0, c); }
    static Laurent monomial(long long k, const Rat& c) {
        Laurent g;
        if (c != 0) g.terms_[k] = c;
        return g;
    }
    // (z + z^-1)/2, the z-model of the identity map x.
    static Laurent x_model();

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    // Degree span endpoints; require a nonzero polynomial.
    long long min_exp() const;
    long long max_exp() const;
    long long span() const { return max_exp() - min_exp(); }

    Rat coeff(long long k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rat(0) : it->second;
    }
    const std::map<long long, Rat>& terms() const { return terms_; }

    void add_term(long long k, const Rat& c);

    Laurent operator-() const;
    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator*(const Rat& c) const;
    friend Laurent operator*(const Rat& c, const Laurent& g) { return g * c; }
    bool operator==(const Laurent&) const = default;

    // z -> c*z (multiplies coefficient of z^k by c^k). c must be nonzero.
    Laurent scaled_arg(const Rat& c) const;
    // z -> 1/z.
    Laurent mirrored() const;
    // Multiply by z^d.
    Laurent shifted_exp(long long d) const;

    // Invariance under z <-> 1/z, i.e. c_k == c_{-k} for all k.
    bool symmetric() const;
    // c_k == -c_{-k} for all k (implies c_0 == 0).
    bool antisymmetric() const;

    std::complex<double> eval(const std::complex<double>& z) const;
    // Exact evaluation; z must be nonzero when negative exponents are present.
    GaussRat eval_exact(const GaussRat& z) const;

    // Coefficients of z^{-min_exp} * this, constant term first. Empty for zero.
    std::vector<Rat> dense() const;
    static Laurent from_dense(const std::vector<Rat>& coeffs, long long min_exp);

    std::string str() const;

private:
    std::map<long long, Rat> terms_;
};

// Dense univariate polynomial helpers over Rat (constant term first, no
// trailing zero coefficients). These back gcd/divisibility for RatFunc.
namespace dense {

void normalize(std::vector<Rat>& p);
bool is_zero(const std::vector<Rat>& p);
int degree(const std::vector<Rat>& p);  // -1 for the zero polynomial
std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b);
// Quotient and remainder over the rational field; b must be nonzero.
std::pair<std::vector<Rat>, std::vector<Rat>> divmod(const std::vector<Rat>& a,
                                                     const std::vector<Rat>& b);
// Monic gcd; gcd(0, 0) = 0.
std::vector<Rat> gcd(std::vector<Rat> a, std::vector<Rat> b);

}  // namespace dense

// Symmetric Laurent polynomial (c_k == c_{-k}): the canonical z-model of a
// polynomial in x under x = (z + 1/z)/2. Closed under + and *.
class SymLaurent {
public:
    SymLaurent() = default;
    // Throws DomainError unless g is symmetric.
    explicit SymLaurent(Laurent g);

    const Laurent& laurent() const { return lp_; }
    bool is_zero() const { return lp_.is_zero(); }

    friend SymLaurent operator+(const SymLaurent& a, const SymLaurent& b) {
        return SymLaurent(a.lp_ + b.lp_);
    }
    friend SymLaurent operator-(const SymLaurent& a, const SymLaurent& b) {
        return SymLaurent(a.lp_ - b.lp_);
    }
    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
        return SymLaurent(a.lp_ * b.lp_);
    }
    SymLaurent operator*(const Rat& c) const { return SymLaurent(lp_ * c); }
    bool operator==(const SymLaurent&) const = default;

private:
    Laurent lp_;
};

}  // namespace awnev
