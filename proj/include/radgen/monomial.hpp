#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "radgen/errors.hpp"

namespace radgen {

using Exponent = std::uint32_t;

// Exponent vector of fixed length (one slot per ring variable).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {}

    std::size_t nvars() const { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    unsigned long total_degree() const {
        return std::accumulate(e_.begin(), e_.end(), 0ul);
    }
    bool is_constant() const {
        for (Exponent x : e_) if (x) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_len(o);
        std::vector<Exponent> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
        return Monomial(std::move(r));
    }

    bool divides(const Monomial& o) const {
        check_len(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; requires o | this
    Monomial quotient_by(const Monomial& o) const {
        check_len(o);
        std::vector<Exponent> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw ValueError("monomial quotient is not exact");
            r[i] = e_[i] - o.e_[i];
        }
        return Monomial(std::move(r));
    }

    bool coprime_with(const Monomial& o) const {
        check_len(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_len(b);
        std::vector<Exponent> r(a.e_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
        return Monomial(std::move(r));
    }

    // bitmask of variables with positive exponent (nvars <= 64 across this codebase)
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i]) m |= (std::uint64_t{1} << i);
        return m;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    void check_len(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw ValueError("monomial length mismatch: " + std::to_string(e_.size()) +
                             " vs " + std::to_string(o.e_.size()));
    }
    std::vector<Exponent> e_;
};

enum class OrderKind { lex, grevlex };

inline std::string order_name(OrderKind k) {
    return k == OrderKind::lex ? "lex" : "grevlex";
}

// a <=> b in the given order. lex compares exponents left to right; grevlex
// compares total degree, ties broken by the rightmost nonzero entry of a-b
// being negative for the greater monomial.
inline std::strong_ordering cmp_monomials(OrderKind order, const Monomial& a,
                                          const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw ValueError("cmp_monomials: length mismatch");
    switch (order) {
        case OrderKind::lex: {
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                if (a[i] != b[i])
                    return a[i] < b[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        }
        case OrderKind::grevlex: {
            unsigned long da = a.total_degree(), db = b.total_degree();
            if (da != db)
                return da < db ? std::strong_ordering::less
                               : std::strong_ordering::greater;
            for (std::size_t i = a.nvars(); i-- > 0;) {
                if (a[i] != b[i])
                    return a[i] > b[i] ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        }
    }
    throw ValueError("unknown monomial order");
}

inline bool monomial_less(OrderKind order, const Monomial& a, const Monomial& b) {
    return cmp_monomials(order, a, b) == std::strong_ordering::less;
}

}  // namespace radgen
