#include "awnev/laurent.hpp"

#include <sstream>

namespace awnev {

Laurent Laurent::x_model() {
    Laurent g;
    g.terms_[1] = Rat(1, 2);
    g.terms_[-1] = Rat(1, 2);
    return g;
}

long long Laurent::min_exp() const {
    if (terms_.empty()) throw ZeroFunctionError("Laurent: min_exp of zero");
    return terms_.begin()->first;
}

long long Laurent::max_exp() const {
    if (terms_.empty()) throw ZeroFunctionError("Laurent: max_exp of zero");
    return terms_.rbegin()->first;
}

void Laurent::add_term(long long k, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator-() const {
    Laurent g;
    for (const auto& [k, c] : terms_) g.terms_[k] = -c;
    return g;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent g = a;
    for (const auto& [k, c] : b.terms_) g.add_term(k, c);
    return g;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent g = a;
    for (const auto& [k, c] : b.terms_) g.add_term(k, -c);
    return g;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent g;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) g.add_term(ka + kb, ca * cb);
    return g;
}

Laurent Laurent::operator*(const Rat& c) const {
    Laurent g;
    if (c == 0) return g;
    for (const auto& [k, v] : terms_) g.terms_[k] = v * c;
    return g;
}

Laurent Laurent::scaled_arg(const Rat& c) const {
    if (c == 0) throw DomainError("Laurent: scaled_arg by zero");
    Laurent g;
    for (const auto& [k, v] : terms_) g.terms_[k] = v * rat_pow(c, k);
    return g;
}

Laurent Laurent::mirrored() const {
    Laurent g;
    for (const auto& [k, v] : terms_) g.terms_[-k] = v;
    return g;
}

Laurent Laurent::shifted_exp(long long d) const {
    Laurent g;
    for (const auto& [k, v] : terms_) g.terms_[k + d] = v;
    return g;
}

bool Laurent::symmetric() const {
    for (const auto& [k, v] : terms_)
        if (coeff(-k) != v) return false;
    return true;
}

bool Laurent::antisymmetric() const {
    for (const auto& [k, v] : terms_)
        if (coeff(-k) != -v) return false;
    return true;
}

std::complex<double> Laurent::eval(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, v] : terms_) acc += to_double(v) * std::pow(z, static_cast<double>(k));
    return acc;
}

GaussRat Laurent::eval_exact(const GaussRat& z) const {
    if (terms_.empty()) return GaussRat(Rat(0));
    // Horner over the dense form of z^{-m} * this, then multiply z^m back.
    long long m = min_exp();
    if (m < 0 && z.is_zero()) throw ZeroDenominatorError("Laurent: evaluating pole at 0");
    GaussRat acc{Rat(0)};
    long long prev = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (long long j = 0; j < prev - it->first; ++j) acc = acc * z;
        acc = acc + GaussRat(it->second);
        prev = it->first;
    }
    // acc now equals z^{-m} * value
    if (m > 0) {
        for (long long j = 0; j < m; ++j) acc = acc * z;
    } else if (m < 0) {
        GaussRat inv = z.inverse();
        for (long long j = 0; j < -m; ++j) acc = acc * inv;
    }
    return acc;
}

std::vector<Rat> Laurent::dense() const {
    std::vector<Rat> out;
    if (terms_.empty()) return out;
    long long m = min_exp();
    out.assign(static_cast<std::size_t>(max_exp() - m + 1), Rat(0));
    for (const auto& [k, v] : terms_) out[static_cast<std::size_t>(k - m)] = v;
    return out;
}

Laurent Laurent::from_dense(const std::vector<Rat>& coeffs, long long min_exp) {
    Laurent g;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) g.terms_[min_exp + static_cast<long long>(i)] = coeffs[i];
    return g;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, v] = *it;
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
            if (!unit) os << "*";
            os << "z";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace dense {

void normalize(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const std::vector<Rat>& p) { return p.empty(); }

int degree(const std::vector<Rat>& p) { return static_cast<int>(p.size()) - 1; }

std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    normalize(out);
    return out;
}

std::vector<Rat> sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out = a;
    if (out.size() < b.size()) out.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    normalize(out);
    return out;
}

std::pair<std::vector<Rat>, std::vector<Rat>> divmod(const std::vector<Rat>& a,
                                                     const std::vector<Rat>& b) {
    if (b.empty()) throw ZeroDenominatorError("dense: division by zero polynomial");
    std::vector<Rat> rem = a;
    normalize(rem);
    const int db = degree(b);
    if (degree(rem) < db) return {{}, rem};
    std::vector<Rat> quot(rem.size() - static_cast<std::size_t>(db), Rat(0));
    const Rat& lead = b.back();
    for (int i = degree(rem); i >= db; --i) {
        Rat c = rem[static_cast<std::size_t>(i)] / lead;
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    normalize(quot);
    normalize(rem);
    return {quot, rem};
}

namespace {

Int int_content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) g = boost::multiprecision::gcd(g, c);
    return g;
}

// Clear denominators and divide out the integer content.
std::vector<Int> integer_primitive(const std::vector<Rat>& p) {
    Int l = 1;
    for (const Rat& c : p) l = int_lcm(l, rat_den(c));
    std::vector<Int> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = rat_num(p[i]) * (l / rat_den(p[i]));
    Int g = int_content(out);
    if (g > 1)
        for (Int& c : out) c /= g;
    return out;
}

// Pseudo-remainder: the remainder of lead(b)^k * a divided by b, all over
// the integers.
std::vector<Int> pseudo_rem(std::vector<Int> r, const std::vector<Int>& b) {
    const Int& lb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db) {
        Int coef = r[static_cast<std::size_t>(dr)];
        for (int j = 0; j < dr; ++j) {
            r[static_cast<std::size_t>(j)] *= lb;
            int k = j - (dr - db);
            if (k >= 0) r[static_cast<std::size_t>(j)] -= coef * b[static_cast<std::size_t>(k)];
        }
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
    }
    return r;
}

}  // namespace

std::vector<Rat> gcd(std::vector<Rat> a0, std::vector<Rat> b0) {
    normalize(a0);
    normalize(b0);
    if (a0.empty()) std::swap(a0, b0);
    if (b0.empty()) {
        if (!a0.empty() && a0.back() != 1) {
            Rat lead = a0.back();
            for (auto& c : a0) c /= lead;
        }
        return a0;
    }
    // Primitive pseudo-remainder sequence over the integers; the naive
    // rational Euclid swells catastrophically on inputs of this size.
    std::vector<Int> a = integer_primitive(a0);
    std::vector<Int> b = integer_primitive(b0);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Int> r = pseudo_rem(std::move(a), b);
        Int c = int_content(r);
        if (c > 1)
            for (Int& x : r) x /= c;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.back() < 0)
        for (Int& c : a) c = -c;
    std::vector<Rat> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rat(a[i], a.back());
    return out;
}

}  // namespace dense

SymLaurent::SymLaurent(Laurent g) : lp_(std::move(g)) {
    if (!lp_.symmetric())
        throw DomainError("SymLaurent: coefficients not invariant under z <-> 1/z");
}

}  // namespace awnev
