#pragma once

// Recursive-descent parser for polynomial expressions over a declared
// variable list: integer/rational literals, + - * ^, parentheses. Returns
// the fully expanded sparse form. '/' is accepted only inside a literal
// (e.g. "3/2"), never as a general operator.

#include "sislne/mpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace sislne {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

class PolynomialParser {
public:
    PolynomialParser(std::string text, std::vector<std::string> vars)
        : text_(std::move(text)), vars_(std::move(vars)) {}

    QMPoly parse() {
        pos_ = 0;
        QMPoly p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    QMPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (take() == '-');
        QMPoly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                take();
                QMPoly t = parse_term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    QMPoly parse_term() {
        QMPoly acc = parse_power();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                take();
                acc = acc * parse_power();
            } else if (peek() == '/') {
                throw ParseError("'/' is only allowed inside a rational literal", pos_);
            } else {
                return acc;
            }
        }
    }

    QMPoly parse_power() {
        QMPoly base = parse_atom();
        skip_ws();
        if (peek() != '^') return base;
        take();
        skip_ws();
        size_t at = pos_;
        if (peek() == '-') throw ParseError("negative exponent", at);
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer exponent", at);
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (take() - '0');
            if (e > 1000) throw ParseError("exponent too large", at);
        }
        return base.pow(static_cast<unsigned>(e));
    }

    QMPoly parse_atom() {
        skip_ws();
        size_t at = pos_;
        char c = peek();
        if (c == '(') {
            take();
            QMPoly p = parse_expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            take();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (std::isdigit(static_cast<unsigned char>(peek()))) num += take();
            std::string den;
            if (peek() == '/') {
                size_t save = pos_;
                take();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                    pos_ = save; // not a literal; parse_term reports the error
                } else {
                    while (std::isdigit(static_cast<unsigned char>(peek()))) den += take();
                }
            }
            Rational v = den.empty() ? Rational(Integer(num)) : Rational(Integer(num), Integer(den));
            return QMPoly::constant(vars_, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += take();
            for (size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) return QMPoly::variable(vars_, i);
            throw ParseError("unknown symbol '" + name + "'", at);
        }
        if (c == '\0') throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }

    std::string text_;
    std::vector<std::string> vars_;
    size_t pos_ = 0;
};

inline QMPoly parse_polynomial(const std::string& text, std::vector<std::string> vars) {
    return PolynomialParser(text, std::move(vars)).parse();
}

} // namespace sislne
