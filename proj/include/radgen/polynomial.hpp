#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "radgen/errors.hpp"
#include "radgen/monomial.hpp"
#include "radgen/ring.hpp"

namespace radgen {

template <class F>
struct Term {
    Monomial mono;
    F coeff;
};

// Sparse exact multivariate polynomial. Terms are kept sorted descending in
// the context's monomial order, with no zero coefficients and no duplicate
// monomials; the zero polynomial is the empty term list. Values are immutable
// once built: every operation returns a new polynomial.
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(CtxPtr<F> ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(CtxPtr<F> ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(CtxPtr<F> ctx, F c) {
        Polynomial p(ctx);
        if (!c.is_zero()) p.terms_.push_back({Monomial(ctx->nvars()), std::move(c)});
        return p;
    }

    static Polynomial one(CtxPtr<F> ctx) {
        F c = ctx->one();
        return constant(std::move(ctx), std::move(c));
    }

    static Polynomial variable(CtxPtr<F> ctx, std::size_t i) {
        if (i >= ctx->nvars()) throw ValueError("variable index out of range");
        std::vector<Exponent> e(ctx->nvars(), 0);
        e[i] = 1;
        Polynomial p(ctx);
        p.terms_.push_back({Monomial(std::move(e)), ctx->one()});
        return p;
    }

    static Polynomial from_terms(CtxPtr<F> ctx, std::vector<Term<F>> terms) {
        Polynomial p(std::move(ctx));
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const CtxPtr<F>& ctx() const { return ctx_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }

    const Monomial& leading_monomial() const {
        require_nonzero("leading_monomial");
        return terms_.front().mono;
    }
    const F& leading_coeff() const {
        require_nonzero("leading_coeff");
        return terms_.front().coeff;
    }
    const Term<F>& leading_term() const {
        require_nonzero("leading_term");
        return terms_.front();
    }

    unsigned long total_degree() const {
        unsigned long d = 0;
        for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
        return d;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const { return merged(o, false); }
    Polynomial operator-(const Polynomial& o) const { return merged(o, true); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_context<F>(ctx_, o.ctx_, "mul");
        Polynomial r(ctx_);
        if (is_zero() || o.is_zero()) return r;
        std::vector<Term<F>> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
        r.terms_ = std::move(acc);
        r.canonicalize();
        return r;
    }

    // this * (c * m); multiplying by a monomial preserves the term order.
    Polynomial mul_term(const Monomial& m, const F& c) const {
        Polynomial r(ctx_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
        return r;
    }

    Polynomial scaled(const F& c) const {
        Polynomial r(ctx_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
        return r;
    }

    Polynomial pow(unsigned long k) const {
        Polynomial r = one(ctx_);
        Polynomial base = *this;
        while (k) {
            if (k & 1) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

    Polynomial monic() const {
        require_nonzero("monic");
        return scaled(leading_coeff().inverse());
    }

    Polynomial without_leading() const {
        require_nonzero("without_leading");
        Polynomial r(ctx_);
        r.terms_.assign(terms_.begin() + 1, terms_.end());
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Rebind to a structurally compatible context (e.g. same vars, new order,
    // or an extension). Variables are matched by name; a source variable may
    // be absent from the target only if this polynomial does not use it.
    Polynomial mapped_to(const CtxPtr<F>& nctx) const {
        constexpr std::size_t kDropped = static_cast<std::size_t>(-1);
        std::vector<std::size_t> vmap(ctx_->nvars(), kDropped);
        for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
            auto j = nctx->var_index(ctx_->vars()[i]);
            if (j) vmap[i] = *j;
        }
        std::vector<Term<F>> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            std::vector<Exponent> e(nctx->nvars(), 0);
            for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
                if (!t.mono[i]) continue;
                if (vmap[i] == kDropped)
                    throw ContextMismatchError("mapped_to: missing variable " +
                                               ctx_->vars()[i]);
                e[vmap[i]] = t.mono[i];
            }
            ts.push_back({Monomial(std::move(e)), t.coeff});
        }
        return from_terms(nctx, std::move(ts));
    }

    // Canonical text form: terms in descending active order, explicit '*',
    // '^' for exponents; parse(str()) reproduces the polynomial exactly.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            F c = t.coeff;
            if (FieldTraits<F>::printed_with_sign()) {
                bool neg = coeff_negative(c);
                if (first) {
                    if (neg) out += "-";
                } else {
                    out += neg ? " - " : " + ";
                }
                if (neg) c = -c;
            } else {
                if (!first) out += " + ";
            }
            out += term_str(t.mono, c);
            first = false;
        }
        return out;
    }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw ValueError(std::string(what) + " of zero polynomial");
    }

    static bool coeff_negative(const F& c) {
        if constexpr (std::is_same_v<F, Rational>) return c.sign() < 0;
        else return false;
    }

    std::string term_str(const Monomial& m, const F& c) const {
        std::string vars;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (!m[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += ctx_->vars()[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) return c.str();
        if (c.is_one()) return vars;
        return c.str() + "*" + vars;
    }

    Polynomial merged(const Polynomial& o, bool negate) const {
        require_same_context<F>(ctx_, o.ctx_, "add");
        Polynomial r(ctx_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        OrderKind ord = ctx_->order();
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            auto c = cmp_monomials(ord, terms_[i].mono, o.terms_[j].mono);
            if (c == std::strong_ordering::greater) {
                r.terms_.push_back(terms_[i++]);
            } else if (c == std::strong_ordering::less) {
                const auto& t = o.terms_[j++];
                r.terms_.push_back({t.mono, negate ? -t.coeff : t.coeff});
            } else {
                F s = negate ? terms_[i].coeff - o.terms_[j].coeff
                             : terms_[i].coeff + o.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i; ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            const auto& t = o.terms_[j];
            r.terms_.push_back({t.mono, negate ? -t.coeff : t.coeff});
        }
        return r;
    }

    void canonicalize() {
        OrderKind ord = ctx_->order();
        std::stable_sort(terms_.begin(), terms_.end(),
                         [&](const Term<F>& a, const Term<F>& b) {
                             return monomial_less(ord, b.mono, a.mono);
                         });
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
                if (out.back().coeff.is_zero()) out.pop_back();
            } else if (!t.coeff.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    CtxPtr<F> ctx_;
    std::vector<Term<F>> terms_;
};

template <class F>
struct DivisionResult {
    std::vector<Polynomial<F>> quotients;
    Polynomial<F> remainder;
};

// Multivariate division of f by an ordered divisor list: f = sum q_i d_i + r
// and no term of r is divisible by any divisor's leading monomial. The result
// is deterministic given the divisor order and the active monomial order
// (the first divisor whose leading monomial divides is always taken).
template <class F>
DivisionResult<F> divide_multi(const Polynomial<F>& f,
                               const std::vector<Polynomial<F>>& divisors) {
    for (const auto& d : divisors) {
        if (d.is_zero()) throw ValueError("divide_multi: zero divisor");
        require_same_context<F>(f.ctx(), d.ctx(), "divide_multi");
    }
    DivisionResult<F> res;
    res.quotients.assign(divisors.size(), Polynomial<F>::zero(f.ctx()));
    res.remainder = Polynomial<F>::zero(f.ctx());
    Polynomial<F> h = f;
    std::vector<Term<F>> rem_terms;
    while (!h.is_zero()) {
        const Term<F>& lt = h.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const auto& d = divisors[i];
            if (!d.leading_monomial().divides(lt.mono)) continue;
            Monomial m = lt.mono.quotient_by(d.leading_monomial());
            F c = lt.coeff / d.leading_coeff();
            res.quotients[i] = res.quotients[i] +
                Polynomial<F>::from_terms(f.ctx(), {{m, c}});
            h = h - d.mul_term(m, c);
            divided = true;
            break;
        }
        if (!divided) {
            // move the leading term to the remainder; it is smaller than
            // everything already moved, so plain append keeps the order
            rem_terms.push_back(lt);
            h = h.without_leading();
        }
    }
    res.remainder = Polynomial<F>::from_terms(f.ctx(), std::move(rem_terms));
    return res;
}

// Remainder-only reduction (the Buchberger hot path). DivisorRange is any
// range of Polynomial<F> or of pointers to them.
template <class F, class DivisorRange>
Polynomial<F> reduce_remainder(const Polynomial<F>& f, const DivisorRange& divisors) {
    auto deref = [](const auto& d) -> const Polynomial<F>& {
        if constexpr (std::is_pointer_v<std::decay_t<decltype(d)>>) return *d;
        else return d;
    };
    Polynomial<F> h = f;
    std::vector<Term<F>> rem_terms;
    while (!h.is_zero()) {
        const Term<F>& lt = h.leading_term();
        bool divided = false;
        for (const auto& dd : divisors) {
            const Polynomial<F>& d = deref(dd);
            if (!d.leading_monomial().divides(lt.mono)) continue;
            Monomial m = lt.mono.quotient_by(d.leading_monomial());
            F c = lt.coeff / d.leading_coeff();
            h = h - d.mul_term(m, c);
            divided = true;
            break;
        }
        if (!divided) {
            rem_terms.push_back(lt);
            h = h.without_leading();
        }
    }
    return Polynomial<F>::from_terms(f.ctx(), std::move(rem_terms));
}

}  // namespace radgen
