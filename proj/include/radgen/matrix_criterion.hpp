#pragma once

#include <optional>
#include <vector>

#include "radgen/membership.hpp"

namespace radgen {

// Input for the matrix criterion: polynomials p_1..p_{n-1}, an n x (n-1)
// matrix whose k-th row is c_k * e_{i_k}, and coefficients alpha_{k0}.
template <class F>
struct MatrixCriterionInput {
    struct Row {
        Polynomial<F> c;
        std::size_t index;  // i_k, 1-based into p
    };

    CtxPtr<F> ctx;
    std::vector<Polynomial<F>> p;
    std::vector<Row> rows;
    std::vector<Polynomial<F>> alpha0;

    std::size_t n() const { return rows.size(); }

    void validate() const {
        if (rows.size() < 2) throw ValueError("matrix criterion: need n >= 2 rows");
        if (p.size() + 1 != rows.size())
            throw ValueError("matrix criterion: need exactly n-1 polynomials p");
        if (alpha0.size() != rows.size())
            throw ValueError("matrix criterion: need exactly n coefficients alpha0");
        for (const auto& f : p) require_same_context<F>(ctx, f.ctx(), "matrix criterion");
        for (const auto& f : alpha0) require_same_context<F>(ctx, f.ctx(), "matrix criterion");
        for (const auto& r : rows) {
            require_same_context<F>(ctx, r.c.ctx(), "matrix criterion");
            if (r.index < 1 || r.index > p.size())
                throw ValueError("matrix criterion: row index out of range");
        }
    }
};

template <class F>
struct MatrixConstruction {
    std::vector<Polynomial<F>> minors;  // Delta_1..Delta_n
    Polynomial<F> p0;
    std::vector<Polynomial<F>> q;       // q_k = alpha_{k0} p0 + c_k p_{i_k}
    Ideal<F> input_ideal;               // (p0, c_1 p_{i_1}, ..., c_n p_{i_n})
    Ideal<F> output_ideal;              // (q_1, ..., q_n)
    std::optional<RadicalEqualResult> certification;
};

namespace detail {

// Determinant of the (n-1)x(n-1) matrix left after dropping row k. Each row
// has a single entry c_j in column i_j, so the determinant is nonzero only
// when the remaining column indices hit 1..n-1 exactly once each; then it is
// the permutation sign times the product of the c_j.
template <class F>
Polynomial<F> sparse_minor(const MatrixCriterionInput<F>& input, std::size_t drop_k) {
    std::size_t cols = input.p.size();
    std::vector<std::size_t> perm;
    perm.reserve(cols);
    std::vector<int> seen(cols + 1, 0);
    for (std::size_t j = 0; j < input.rows.size(); ++j) {
        if (j == drop_k) continue;
        std::size_t col = input.rows[j].index;
        if (++seen[col] > 1) return Polynomial<F>::zero(input.ctx);
        perm.push_back(col);
    }
    // all columns covered exactly once
    for (std::size_t c = 1; c <= cols; ++c)
        if (!seen[c]) return Polynomial<F>::zero(input.ctx);

    std::size_t inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;

    Polynomial<F> det = Polynomial<F>::one(input.ctx);
    for (std::size_t j = 0; j < input.rows.size(); ++j)
        if (j != drop_k) det = det * input.rows[j].c;
    if (inversions % 2) det = -det;
    return det;
}

}  // namespace detail

// Theorem-1 style replacement of the n+1 generators (p0, c_k p_{i_k}) by the
// n combinations q_k = alpha_{k0} p0 + c_k p_{i_k}, where p0 is the signed
// alpha-weighted sum of the maximal minors. The radical equality of the two
// ideals is certified and attached unless certify=false.
template <class F>
MatrixConstruction<F> theorem1_construct(const MatrixCriterionInput<F>& input,
                                         bool certify = true, const GbLimits& limits = {}) {
    input.validate();
    MatrixConstruction<F> out{.minors = {},
                              .p0 = Polynomial<F>::zero(input.ctx),
                              .q = {},
                              .input_ideal = Ideal<F>(input.ctx),
                              .output_ideal = Ideal<F>(input.ctx),
                              .certification = std::nullopt};

    for (std::size_t k = 0; k < input.n(); ++k)
        out.minors.push_back(detail::sparse_minor(input, k));

    for (std::size_t k = 0; k < input.n(); ++k) {
        Polynomial<F> contrib = input.alpha0[k] * out.minors[k];
        // (-1)^k with k running 1..n
        out.p0 = (k % 2 == 0) ? out.p0 - contrib : out.p0 + contrib;
    }

    std::vector<Polynomial<F>> input_gens{out.p0};
    for (std::size_t k = 0; k < input.n(); ++k) {
        Polynomial<F> scaled_p = input.rows[k].c * input.p[input.rows[k].index - 1];
        out.q.push_back(input.alpha0[k] * out.p0 + scaled_p);
        input_gens.push_back(std::move(scaled_p));
    }
    out.input_ideal = Ideal<F>(input.ctx, std::move(input_gens));
    out.output_ideal = Ideal<F>(input.ctx, out.q);
    if (certify)
        out.certification = radical_equal(out.input_ideal, out.output_ideal, limits);
    return out;
}

template <class F>
struct Corollary1Result {
    Polynomial<F> p0;  // alpha1 beta1 + alpha2 beta2
    Polynomial<F> q1;  // alpha1 p0 + beta2 gamma
    Polynomial<F> q2;  // alpha2 p0 - beta1 gamma
    Ideal<F> target;   // (p0, beta1 gamma, beta2 gamma)
    Ideal<F> combined; // (q1, q2)
    std::optional<RadicalEqualResult> certification;
};

// The n=2 specialization: sqrt(a1 b1 + a2 b2, b1 g, b2 g) = sqrt(q1, q2).
template <class F>
Corollary1Result<F> corollary1(const Polynomial<F>& alpha1, const Polynomial<F>& alpha2,
                               const Polynomial<F>& beta1, const Polynomial<F>& beta2,
                               const Polynomial<F>& gamma, bool certify = true,
                               const GbLimits& limits = {}) {
    CtxPtr<F> ctx = alpha1.ctx();
    MatrixCriterionInput<F> input{
        .ctx = ctx,
        .p = {gamma},
        .rows = {{beta2, 1}, {-beta1, 1}},
        .alpha0 = {alpha1, alpha2}};
    MatrixConstruction<F> cons = theorem1_construct(input, /*certify=*/false, limits);

    Corollary1Result<F> res{.p0 = cons.p0,
                            .q1 = cons.q[0],
                            .q2 = cons.q[1],
                            .target = Ideal<F>(ctx, {cons.p0, beta1 * gamma, beta2 * gamma}),
                            .combined = cons.output_ideal,
                            .certification = std::nullopt};
    if (certify) res.certification = radical_equal(res.target, res.combined, limits);
    return res;
}

}  // namespace radgen
