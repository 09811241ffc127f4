#include "awnev/mpoly.hpp"

#include <numeric>
#include <sstream>

#include "awnev/errors.hpp"

namespace awnev {

MPoly MPoly::monomial(std::vector<int> exps, const Rat& c) {
    MPoly p(static_cast<int>(exps.size()));
    p.add_term(exps, c);
    return p;
}

MPoly MPoly::linear_form(const std::vector<Rat>& coeffs) {
    MPoly p(static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::vector<int> e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0) == 0);
}

int MPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
    return deg;
}

bool MPoly::homogeneous() const {
    if (terms_.empty()) return true;
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (deg < 0) deg = d;
        if (d != deg) return false;
    }
    return true;
}

void MPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw BadArity("MPoly: exponent tuple has wrong length");
    for (int e : exps)
        if (e < 0) throw DomainError("MPoly: negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw BadArity("MPoly: mixed variable counts");
    MPoly p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw BadArity("MPoly: mixed variable counts");
    MPoly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly p(nvars_);
    if (c == 0) return p;
    for (const auto& [e, v] : terms_) p.terms_[e] = v * c;
    return p;
}

MPoly MPoly::pow(int e) const {
    if (e < 0) throw DomainError("MPoly: negative power");
    MPoly acc = MPoly::monomial(std::vector<int>(static_cast<std::size_t>(nvars_), 0), Rat(1));
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Rat MPoly::max_abs_coeff() const {
    Rat best(0);
    for (const auto& [e, c] : terms_) best = std::max(best, rat_abs(c));
    return best;
}

XPoly MPoly::compose(const std::vector<XPoly>& components) const {
    if (static_cast<int>(components.size()) != nvars_)
        throw BadArity("MPoly: component count does not match variable count");
    XPoly acc;
    for (const auto& [e, c] : terms_) {
        XPoly term = XPoly::constant(c);
        for (std::size_t i = 0; i < components.size(); ++i)
            if (e[i] > 0) term = term * components[i].pow(e[i]);
        acc = acc + term;
    }
    return acc;
}

std::complex<double> MPoly::eval(const std::vector<std::complex<double>>& xs) const {
    if (static_cast<int>(xs.size()) != nvars_)
        throw BadArity("MPoly: point dimension does not match variable count");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> term = to_double(c);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= xs[i];
        acc += term;
    }
    return acc;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = rat_abs(c);
        bool printed = false;
        if (a != 1) {
            os << rat_to_string(a);
            printed = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << rat_to_string(a);
    }
    return os.str();
}

Hypersurface::Hypersurface(MPoly q, std::vector<std::pair<MPoly, int>> fs)
    : poly(std::move(q)), degree(poly.total_degree()), factors(std::move(fs)) {
    if (poly.is_zero()) throw DomainError("Hypersurface: zero polynomial");
    if (!poly.homogeneous()) throw DomainError("Hypersurface: polynomial not homogeneous");
    if (degree < 1) throw DomainError("Hypersurface: degree must be at least 1");
    if (!factors.empty()) {
        MPoly prod = MPoly::monomial(std::vector<int>(static_cast<std::size_t>(poly.nvars()), 0),
                                     Rat(1));
        for (const auto& [f, mult] : factors) {
            if (mult < 1) throw DomainError("Hypersurface: factor multiplicity must be >= 1");
            if (!f.homogeneous() || f.total_degree() < 1)
                throw DomainError("Hypersurface: factors must be homogeneous of degree >= 1");
            prod = prod * f.pow(mult);
        }
        // Product must reproduce Q up to a nonzero scalar.
        if (prod.total_degree() != degree)
            throw DomainError("Hypersurface: factor degrees do not sum to deg Q");
        const auto& [e0, c0] = *poly.terms().begin();
        auto it = prod.terms().find(e0);
        if (it == prod.terms().end())
            throw DomainError("Hypersurface: factors do not multiply to Q");
        Rat scale = c0 / it->second;
        if (!(prod * scale == poly))
            throw DomainError("Hypersurface: factors do not multiply to Q");
    }
}

ProjCurveRep::ProjCurveRep(std::vector<XPoly> comps, AwContext c)
    : components(std::move(comps)), ctx(std::move(c)) {
    if (components.empty()) throw BadArity("ProjCurveRep: needs at least one component");
    bool any = false;
    XPoly g;
    for (const XPoly& p : components) {
        if (!p.is_zero()) any = true;
        g = xpoly_gcd(g, p);
    }
    if (!any) throw DomainError("ProjCurveRep: all components vanish");
    if (g.degree() > 0)
        throw DomainError("ProjCurveRep: components share the common factor " + g.str());
}

int ProjCurveRep::max_degree() const {
    int d = 0;
    for (const XPoly& p : components) d = std::max(d, p.degree());
    return d;
}

HyperplaneSet::HyperplaneSet(std::vector<std::vector<Rat>> fs) : forms(std::move(fs)) {
    if (forms.empty()) throw BadArity("HyperplaneSet: no forms");
    const std::size_t len = forms[0].size();
    for (const auto& f : forms) {
        if (f.size() != len) throw BadArity("HyperplaneSet: ragged coefficient rows");
        bool nonzero = false;
        for (const Rat& c : f) nonzero = nonzero || c != 0;
        if (!nonzero) throw DomainError("HyperplaneSet: zero form");
    }
}

XPoly HyperplaneSet::apply(int j, const ProjCurveRep& curve) const {
    const auto& form = forms.at(static_cast<std::size_t>(j));
    if (form.size() != curve.components.size())
        throw BadArity("HyperplaneSet: form length does not match curve");
    XPoly acc;
    for (std::size_t i = 0; i < form.size(); ++i)
        acc = acc + curve.components[i] * form[i];
    return acc;
}

}  // namespace awnev
