#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "radgen/polynomial.hpp"

namespace radgen {

// Recursive-descent parser for polynomial expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ['^' NUMBER]
//   atom   := NUMBER ['/' NUMBER] | VAR | '(' expr ')'
//
// '^' binds tightest, then unary '-', then '*', then '+'/'-'. Implicit
// multiplication is not allowed; variables must be declared in the ring
// context.
template <class F>
class PolyParser {
public:
    PolyParser(std::string_view text, CtxPtr<F> ctx)
        : text_(text), ctx_(std::move(ctx)) {}

    Polynomial<F> parse() {
        Polynomial<F> p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    Polynomial<F> expr() {
        Polynomial<F> acc = term();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Polynomial<F> t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> term() {
        Polynomial<F> acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Polynomial<F> base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer k = number();
            if (k < 0 || !k.fits_ulong_p())
                throw ParseError("exponent out of range", at);
            base = base.pow(k.get_ui());
        }
        return base;
    }

    Polynomial<F> atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<F> p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = number();
            Integer den = 1;
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                den = number();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            return Polynomial<F>::constant(ctx_, ctx_->scalar(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = identifier();
            auto idx = ctx_->var_index(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial<F>::variable(ctx_, *idx);
        }
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Integer number() {
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++pos_;
            else break;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    CtxPtr<F> ctx_;
    std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_poly(std::string_view text, const CtxPtr<F>& ctx) {
    return PolyParser<F>(text, ctx).parse();
}

}  // namespace radgen
