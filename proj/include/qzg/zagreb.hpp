#pragma once

#include <cstdint>

#include "qzg/graph.hpp"

// First and second Zagreb indices, exact integer arithmetic throughout.
// With at most 32 vertices both indices fit comfortably in 64 bits.

namespace qzg {

struct IndexPair {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;

    friend bool operator==(const IndexPair& a, const IndexPair& b) {
        return a.m1 == b.m1 && a.m2 == b.m2;
    }
};

// Sum of squared vertex degrees.
inline std::int64_t m1(const Graph& g) {
    std::int64_t total = 0;
    for (int v = 0; v < g.order(); ++v) {
        const std::int64_t d = g.degree(v);
        total += d * d;
    }
    return total;
}

// Sum over edges of the product of the endpoint degrees.
inline std::int64_t m2(const Graph& g) {
    std::int64_t total = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t higher = g.neighbors(v) & ~mask_of_n(v + 1);
        while (higher)
            total += std::int64_t{g.degree(v)} * g.degree(pop_lowest(higher));
    }
    return total;
}

inline IndexPair index_pair(const Graph& g) { return {m1(g), m2(g)}; }

}  // namespace qzg
