#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "awnev/operators.hpp"
#include "awnev/xpoly.hpp"

namespace awnev {

// Polynomial in x_0..x_n over Rat, stored as exponent-tuple -> coefficient.
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly monomial(std::vector<int> exps, const Rat& c);
    // Linear form sum c_i x_i.
    static MPoly linear_form(const std::vector<Rat>& coeffs);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for zero
    bool homogeneous() const;

    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
    void add_term(const std::vector<int>& exps, const Rat& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator*(const Rat& c) const;
    MPoly pow(int e) const;
    bool operator==(const MPoly&) const = default;

    // Maximum absolute value of the coefficients.
    Rat max_abs_coeff() const;

    // Substitute univariate polynomials for the variables.
    XPoly compose(const std::vector<XPoly>& components) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& xs) const;

    std::string str() const;

private:
    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

// Hypersurface {Q = 0} in P^n given by a homogeneous polynomial, with an
// optional irreducible factorization (factor, multiplicity). When factors
// are present their product must reproduce Q up to a nonzero scalar.
struct Hypersurface {
    MPoly poly;
    int degree;
    std::vector<std::pair<MPoly, int>> factors;

    explicit Hypersurface(MPoly q, std::vector<std::pair<MPoly, int>> fs = {});

    bool has_factors() const { return !factors.empty(); }
    int distinct_factor_count() const { return static_cast<int>(factors.size()); }
};

// Reduced representation of a holomorphic curve C -> P^n with polynomial
// components: at least one nonzero component and no common zero (the gcd of
// all components is constant).
struct ProjCurveRep {
    std::vector<XPoly> components;
    AwContext ctx;

    ProjCurveRep(std::vector<XPoly> comps, AwContext c);
    int dim() const { return static_cast<int>(components.size()) - 1; }  // n
    int max_degree() const;
};

// Hyperplanes as exact coefficient rows (length n+1 each).
struct HyperplaneSet {
    std::vector<std::vector<Rat>> forms;

    explicit HyperplaneSet(std::vector<std::vector<Rat>> fs);
    int count() const { return static_cast<int>(forms.size()); }
    int ambient_vars() const { return forms.empty() ? 0 : static_cast<int>(forms[0].size()); }

    // L_j applied to the curve components.
    XPoly apply(int j, const ProjCurveRep& curve) const;
};

}  // namespace awnev
