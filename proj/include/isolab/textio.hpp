// Copyright (c) the isolab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Polynomial text grammar shared by the CLI: terms `c*x^k`, `x^k`, `c`,
// operators + and -, parenthesized products `(...)*(...)^m`.  Parsing and
// canonical serialization round-trip bit-exactly.

#ifndef ISOLAB_TEXTIO_HPP
#define ISOLAB_TEXTIO_HPP

#include <cctype>
#include <string>

#include "isolab/intpoly.hpp"

namespace isolab {

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    IntPoly parse() {
        IntPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) err("unexpected trailing input");
        return r;
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void err(const std::string& what) {
        fail("SyntaxError", what + " at position " + std::to_string(pos_));
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    // expr := ['+'|'-'] term (('+'|'-') term)*
    IntPoly expr() {
        IntPoly acc;
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    // term := factor ('*' factor)*
    IntPoly term() {
        IntPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    // factor := primary ['^' uint]
    IntPoly factor() {
        IntPoly base = primary();
        if (eat('^')) {
            long e = parse_uint_long();
            return poly_pow(base, e);
        }
        return base;
    }

    // primary := uint | 'x' | '(' expr ')'
    IntPoly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            if (!eat(')')) err("expected ')'");
            return inner;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return IntPoly{0, 1};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return poly_const(parse_uint_big());
        err("expected a constant, 'x', or '('");
    }

    Int parse_uint_big() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) err("expected a digit");
        return Int(s_.substr(start, pos_ - start));
    }

    long parse_uint_long() {
        Int v = parse_uint_big();
        if (v > 1000000) err("exponent too large");
        return static_cast<long>(v);
    }
};

}  // namespace detail

inline IntPoly parse_poly(const std::string& text) { return detail::PolyParser(text).parse(); }

inline std::string int_to_string(const Int& v) { return v.str(); }

// Canonical text form: descending powers, explicit signs, `*` for
// coefficients, no redundant 1-coefficients or ^1 exponents.
inline std::string serialize_poly(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long k = f.degree(); k >= 0; --k) {
        Int c = f.coeff(k);
        if (c == 0) continue;
        bool negative = c < 0;
        Int a = abs_int(c);
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mag = a.str();
        if (k == 0) {
            out += mag;
        } else {
            if (a != 1) out += mag + "*";
            out += "x";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace isolab

#endif  // ISOLAB_TEXTIO_HPP
