#pragma once

#include <cstdint>
#include <vector>

#include "radgen/groebner.hpp"
#include "radgen/ideal.hpp"

namespace radgen {

// Krull dimension of R/I, computed combinatorially from the leading-term
// ideal of a reduced basis: the largest set S of variables such that no
// leading monomial is supported entirely inside S (dim R/I = dim R/LT(I)).
template <class F>
int dimension(const Ideal<F>& I, const GbLimits& limits = {}) {
    GroebnerBasis<F> rgb = reduced_groebner(I, limits);
    if (rgb.is_unit()) throw ValueError("dimension: ideal is the whole ring (1 in I)");

    std::size_t n = I.ctx()->nvars();
    if (n > 24) throw ValueError("dimension: brute-force search supports up to 24 variables");

    std::vector<std::uint64_t> lt_masks;
    lt_masks.reserve(rgb.elems.size());
    for (const auto& g : rgb.elems) lt_masks.push_back(g.leading_monomial().support_mask());

    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int size = __builtin_popcountll(s);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint64_t m : lt_masks)
            if ((m & ~s) == 0) { independent = false; break; }
        if (independent) best = size;
    }
    return best;
}

}  // namespace radgen
