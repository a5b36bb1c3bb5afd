#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radgen/errors.hpp"
#include "radgen/field.hpp"
#include "radgen/monomial.hpp"

namespace radgen {

// Immutable description of a polynomial ring: field, named variables, and the
// active monomial order. Polynomials hold a shared_ptr to their context;
// contexts compare by value so structurally equal rings interoperate.
template <class F>
class RingContext {
public:
    static std::shared_ptr<const RingContext> create(std::vector<std::string> vars,
                                                     OrderKind order, F proto_one) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[i] == vars[j])
                    throw ValueError("duplicate variable name: " + vars[i]);
        if (vars.size() > 64)
            throw ValueError("at most 64 variables are supported");
        return std::shared_ptr<const RingContext>(
            new RingContext(std::move(vars), order, std::move(proto_one)));
    }

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    OrderKind order() const { return order_; }
    const F& proto() const { return proto_; }

    F zero() const { return FieldTraits<F>::zero(proto_); }
    F one() const { return FieldTraits<F>::one(proto_); }
    F scalar(long n) const { return FieldTraits<F>::from_int(n, proto_); }
    F scalar(const Integer& num, const Integer& den) const {
        return FieldTraits<F>::from_fraction(num, den, proto_);
    }

    std::string field_descriptor() const { return FieldTraits<F>::descriptor(proto_); }

    std::optional<std::size_t> var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vars_.begin());
    }

    bool same_as(const RingContext& o) const {
        return order_ == o.order_ && vars_ == o.vars_ &&
               field_descriptor() == o.field_descriptor();
    }

    std::shared_ptr<const RingContext> with_order(OrderKind order) const {
        return create(vars_, order, proto_);
    }

    // New context with extra variables appended (or prepended).
    std::shared_ptr<const RingContext> extended(const std::vector<std::string>& extra,
                                                bool prepend, OrderKind order) const {
        std::vector<std::string> v;
        if (prepend) {
            v = extra;
            v.insert(v.end(), vars_.begin(), vars_.end());
        } else {
            v = vars_;
            v.insert(v.end(), extra.begin(), extra.end());
        }
        return create(std::move(v), order, proto_);
    }

    // A variable name not colliding with any existing one.
    std::string fresh_var(const std::string& stem) const {
        if (!var_index(stem)) return stem;
        for (int i = 0;; ++i) {
            std::string cand = stem + std::to_string(i);
            if (!var_index(cand)) return cand;
        }
    }

private:
    RingContext(std::vector<std::string> vars, OrderKind order, F proto)
        : vars_(std::move(vars)), order_(order), proto_(std::move(proto)) {}

    std::vector<std::string> vars_;
    OrderKind order_;
    F proto_;
};

template <class F>
using CtxPtr = std::shared_ptr<const RingContext<F>>;

template <class F>
inline void require_same_context(const CtxPtr<F>& a, const CtxPtr<F>& b,
                                 const char* where) {
    if (a == b) return;
    if (a && b && a->same_as(*b)) return;
    throw ContextMismatchError(std::string(where) + ": operands from different rings");
}

inline CtxPtr<Rational> make_ring_q(std::vector<std::string> vars,
                                    OrderKind order = OrderKind::grevlex) {
    return RingContext<Rational>::create(std::move(vars), order, Rational::one());
}

inline CtxPtr<GfP> make_ring_fp(std::uint64_t p, std::vector<std::string> vars,
                                OrderKind order = OrderKind::grevlex) {
    if (!is_prime(p)) throw ValueError("modulus " + std::to_string(p) + " is not prime");
    return RingContext<GfP>::create(std::move(vars), order, GfP(1, p));
}

// x1..xn
inline std::vector<std::string> default_vars(std::size_t n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

}  // namespace radgen
