#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radgen/polynomial.hpp"

namespace radgen {

// A ring context plus a finite generator list. Zero polynomials are dropped
// on construction; the remaining list order is preserved (it only matters for
// deterministic output, never for the ideal itself). The empty list is the
// zero ideal.
template <class F>
class Ideal {
public:
    Ideal() = default;  // placeholder; not usable until assigned
    explicit Ideal(CtxPtr<F> ctx) : ctx_(std::move(ctx)) {}

    Ideal(CtxPtr<F> ctx, std::vector<Polynomial<F>> gens) : ctx_(std::move(ctx)) {
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            require_same_context<F>(ctx_, g.ctx(), "Ideal");
            gens_.push_back(std::move(g));
        }
    }

    static Ideal of(std::vector<Polynomial<F>> gens) {
        if (gens.empty()) throw ValueError("Ideal::of needs at least one polynomial");
        CtxPtr<F> ctx = gens.front().ctx();
        return Ideal(std::move(ctx), std::move(gens));
    }

    const CtxPtr<F>& ctx() const { return ctx_; }
    const std::vector<Polynomial<F>>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    Ideal mapped_to(const CtxPtr<F>& nctx) const {
        std::vector<Polynomial<F>> gs;
        gs.reserve(gens_.size());
        for (const auto& g : gens_) gs.push_back(g.mapped_to(nctx));
        return Ideal(nctx, std::move(gs));
    }

    // I + J as generator lists (same ring).
    Ideal sum(const Ideal& o) const {
        require_same_context<F>(ctx_, o.ctx_, "Ideal::sum");
        std::vector<Polynomial<F>> gs = gens_;
        gs.insert(gs.end(), o.gens_.begin(), o.gens_.end());
        return Ideal(ctx_, std::move(gs));
    }

    // Product ideal: all pairwise generator products.
    Ideal product(const Ideal& o) const {
        require_same_context<F>(ctx_, o.ctx_, "Ideal::product");
        std::vector<Polynomial<F>> gs;
        gs.reserve(gens_.size() * o.gens_.size());
        for (const auto& a : gens_)
            for (const auto& b : o.gens_) gs.push_back(a * b);
        return Ideal(ctx_, std::move(gs));
    }

private:
    CtxPtr<F> ctx_;
    std::vector<Polynomial<F>> gens_;
};

// Stable fingerprint of a generator list (FNV-1a over the canonical text),
// used to tie certificates to the ideal they talk about.
template <class F>
std::string ideal_hash(const Ideal<F>& I) {
    std::uint64_t h = 1469598103934665603ull;
    auto eat = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    };
    eat(I.ctx()->field_descriptor());
    eat(order_name(I.ctx()->order()));
    for (const auto& v : I.ctx()->vars()) eat(v);
    for (const auto& g : I.gens()) eat(g.str());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace radgen
