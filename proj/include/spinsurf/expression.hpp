#pragma once

#include <cctype>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include "spinsurf/grid.hpp"

namespace spinsurf {

/// Compiled complex-valued expression of the grid variables. Supported
/// grammar: numbers, i, pi, z, zbar, x, y, + - * / ^ ( ), and the functions
/// exp, sin, cos, tan, sinh, cosh, sqrt, conj, re, im, abs.
using CompiledExpression = std::function<std::complex<double>(std::complex<double>)>;

namespace detail {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    CompiledExpression parse() {
        auto e = expression();
        skip_ws();
        if (pos_ != s_.size())
            throw std::invalid_argument("expression: trailing input at '" + s_.substr(pos_) + "'");
        return e;
    }

private:
    using C = std::complex<double>;
    using Fn = CompiledExpression;

    Fn expression() {
        Fn lhs = term();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                Fn rhs = term();
                lhs = [lhs, rhs](C z) { return lhs(z) + rhs(z); };
            } else if (consume('-')) {
                Fn rhs = term();
                lhs = [lhs, rhs](C z) { return lhs(z) - rhs(z); };
            } else {
                return lhs;
            }
        }
    }

    Fn term() {
        Fn lhs = unary();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                Fn rhs = unary();
                lhs = [lhs, rhs](C z) { return lhs(z) * rhs(z); };
            } else if (consume('/')) {
                Fn rhs = unary();
                lhs = [lhs, rhs](C z) { return lhs(z) / rhs(z); };
            } else {
                return lhs;
            }
        }
    }

    Fn unary() {
        skip_ws();
        if (consume('-')) {
            Fn e = unary();
            return [e](C z) { return -e(z); };
        }
        if (consume('+')) return unary();
        return power();
    }

    Fn power() {
        Fn base = primary();
        skip_ws();
        if (consume('^')) {
            Fn exp = unary();
            return [base, exp](C z) { return std::pow(base(z), exp(z)); };
        }
        return base;
    }

    Fn primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw std::invalid_argument("expression: unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (consume('(')) {
            Fn e = expression();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw std::invalid_argument(std::string("expression: unexpected character '") + c + "'");
    }

    Fn number() {
        std::size_t used = 0;
        const double v = std::stod(s_.substr(pos_), &used);
        pos_ += used;
        return [v](C) { return C{v, 0.0}; };
    }

    Fn identifier() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string name = s_.substr(start, pos_ - start);

        if (name == "i") return [](C) { return C{0.0, 1.0}; };
        if (name == "pi") return [](C) { return C{3.141592653589793238462643383279502884, 0.0}; };
        if (name == "z") return [](C z) { return z; };
        if (name == "zbar") return [](C z) { return std::conj(z); };
        if (name == "x") return [](C z) { return C{z.real(), 0.0}; };
        if (name == "y") return [](C z) { return C{z.imag(), 0.0}; };

        skip_ws();
        expect('(');
        Fn arg = expression();
        expect(')');
        if (name == "exp") return [arg](C z) { return std::exp(arg(z)); };
        if (name == "sin") return [arg](C z) { return std::sin(arg(z)); };
        if (name == "cos") return [arg](C z) { return std::cos(arg(z)); };
        if (name == "tan") return [arg](C z) { return std::tan(arg(z)); };
        if (name == "sinh") return [arg](C z) { return std::sinh(arg(z)); };
        if (name == "cosh") return [arg](C z) { return std::cosh(arg(z)); };
        if (name == "sqrt") return [arg](C z) { return std::sqrt(arg(z)); };
        if (name == "conj") return [arg](C z) { return std::conj(arg(z)); };
        if (name == "re") return [arg](C z) { return C{arg(z).real(), 0.0}; };
        if (name == "im") return [arg](C z) { return C{arg(z).imag(), 0.0}; };
        if (name == "abs") return [arg](C z) { return C{std::abs(arg(z)), 0.0}; };
        throw std::invalid_argument("expression: unknown function '" + name + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        skip_ws();
        if (!consume(c))
            throw std::invalid_argument(std::string("expression: expected '") + c + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline CompiledExpression compile_expression(const std::string& text) {
    return detail::ExprParser(text).parse();
}

inline Field sample_expression(const GridDomain& d, const std::string& text) {
    auto fn = compile_expression(text);
    return sample_field(d, fn);
}

} // namespace spinsurf
