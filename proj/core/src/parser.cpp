#include "awnev/parser.hpp"

#include <cctype>

#include "awnev/errors.hpp"

namespace awnev {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    XPoly run() {
        XPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected character", pos_);
        return p;
    }

private:
    XPoly expr() {
        XPoly acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    XPoly term() {
        XPoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    XPoly factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        XPoly p = power();
        return neg ? -p : p;
    }

    XPoly power() {
        XPoly base = primary();
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        if (peek() == '-') throw ExponentError("negative exponent", at);
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected integer exponent after '^'", at);
        auto [num, den] = number_parts();
        if (den != 1) throw ExponentError("fractional exponent", at);
        if (num > 4096) throw ExponentError("exponent too large", at);
        return base.pow(static_cast<int>(num.convert_to<long long>()));
    }

    XPoly primary() {
        skip_ws();
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            XPoly p = expr();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return XPoly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto [num, den] = number_parts();
            return XPoly::constant(Rat(num, den));
        }
        if (c == '\0') throw SyntaxError("unexpected end of input", at);
        throw SyntaxError("unexpected character", at);
    }

    // digits [ '/' digits ]; the '/' belongs to the literal, not an operator.
    std::pair<Int, Int> number_parts() {
        Int num = digits();
        Int den = 1;
        if (peek() == '/') {
            std::size_t at = pos_;
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw SyntaxError("expected digits after '/'", pos_);
            den = digits();
            if (den == 0) throw SyntaxError("zero denominator in literal", at);
        }
        return {num, den};
    }

    Int digits() {
        std::size_t begin = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Int(s_.substr(begin, pos_ - begin));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

XPoly parse_xpoly(const std::string& text) { return Parser(text).run(); }

}  // namespace awnev
