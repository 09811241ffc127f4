#include "awnev/rational.hpp"

#include <cctype>

namespace awnev {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw DomainError("rational: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](const char* what) {
        std::size_t begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == begin) throw DomainError(std::string("rational: expected ") + what + " in '" + text + "'");
        return Int(text.substr(begin, i - begin));
    };
    Int num = read_digits("numerator");
    Int den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_digits("denominator");
        if (den == 0) throw ZeroDenominatorError("rational: zero denominator in '" + text + "'");
    }
    if (i != text.size()) throw DomainError("rational: trailing characters in '" + text + "'");
    Rat r(num, den);
    return neg ? -r : r;
}

std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

Rat rat_pow(const Rat& r, long long k) {
    if (k == 0) return Rat(1);
    if (r == 0) {
        if (k < 0) throw ZeroDenominatorError("rat_pow: 0 to a negative power");
        return Rat(0);
    }
    Rat base = k > 0 ? r : Rat(1) / r;
    unsigned long long e = k > 0 ? static_cast<unsigned long long>(k)
                                 : static_cast<unsigned long long>(-k);
    Rat acc(1);
    while (e > 0) {
        if (e & 1ull) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rat rat_abs(const Rat& r) { return r < 0 ? -r : r; }

Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);  // truncates toward zero
    if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

Int int_factorial(const Int& n) {
    Int acc = 1;
    for (Int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Int int_binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    Int acc = 1;
    for (Int i = 1; i <= kk; ++i) {
        acc *= n - kk + i;
        acc /= i;  // exact at every step
    }
    return acc;
}

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

std::string gauss_to_string(const GaussRat& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string s = rat_to_string(g.re);
    s += g.im < 0 ? " - " : " + ";
    s += rat_to_string(rat_abs(g.im)) + "*i";
    return s;
}

}  // namespace awnev
