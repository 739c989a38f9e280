#pragma once

#include <optional>

#include "qzg/graph.hpp"

// p-quasi k-cyclic membership. A connected graph is p-quasi k-cyclic when
// the smallest vertex set whose deletion leaves a connected k-cyclic graph
// has size exactly p. The deletion remainder must be nonempty and
// connected; this is the reading adopted throughout the library, since
// the cyclomatic number m - n + 1 is the connected form.

namespace qzg {

// Smallest order of a connected k-cyclic graph (1, 3, 4, 4 for k = 0..3).
inline int min_kcyclic_order(int k) {
    if (k < 0) throw std::invalid_argument("min_kcyclic_order: k must be >= 0");
    for (int n = 1;; ++n)
        if (n * (n - 1) / 2 - n + 1 >= k) return n;
}

struct Classification {
    int k = 0;
    std::optional<int> p;              // empty = infeasible
    std::vector<VertexSet> witnesses;  // all minimal sets, ascending bitmask order

    bool feasible() const { return p.has_value(); }
};

namespace quasi_detail {

// Remainder after deleting `del` is nonempty and connected. Works on
// masked rows directly; no relabeling.
inline bool remainder_connected(const Graph& g, std::uint32_t del) {
    const std::uint32_t keep = g.vertex_mask() & ~del;
    if (keep == 0) return false;
    std::uint32_t seen = keep & (~keep + 1);  // lowest kept vertex
    std::uint32_t frontier = seen;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) next |= g.neighbors(pop_lowest(frontier));
        next &= keep;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == keep;
}

// Remainder is nonempty, connected and k-cyclic; connectivity first, it
// is the cheaper reject.
inline bool remainder_is_kcyclic(const Graph& g, std::uint32_t del, int k) {
    if (!remainder_connected(g, del)) return false;
    const std::uint32_t keep = g.vertex_mask() & ~del;
    int twice_m = 0;
    for (std::uint32_t m = keep; m;) twice_m += std::popcount(g.neighbors(pop_lowest(m)) & keep);
    return twice_m / 2 - std::popcount(keep) + 1 == k;
}

// Next bitmask with the same popcount (Gosper).
inline std::uint32_t next_subset(std::uint32_t m) {
    const std::uint32_t c = m & (~m + 1);
    const std::uint32_t r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

}  // namespace quasi_detail

// Scans deletion sizes 0, 1, 2, ... and subsets within a size in ascending
// bitmask order; returns the first feasible size with every witness of
// that size. Sizes that cannot leave a k-cyclic remainder are skipped.
inline Classification min_deletion_to_kcyclic(const Graph& g, int k, bool collect_witnesses = true) {
    if (!g.is_connected())
        throw std::domain_error("min_deletion_to_kcyclic: input graph must be connected");
    if (k < 0) throw std::invalid_argument("min_deletion_to_kcyclic: k must be >= 0");
    Classification out;
    out.k = k;
    const int n = g.order();
    // deleting vertices never raises the cyclomatic number of a connected remainder
    if (g.cyclomatic_number() < k) return out;
    const int smax = n - min_kcyclic_order(k);
    for (int s = 0; s <= smax; ++s) {
        bool found = false;
        std::uint32_t mask = s == 0 ? 0 : mask_of_n(s);
        for (;;) {
            if (quasi_detail::remainder_is_kcyclic(g, mask, k)) {
                found = true;
                if (!collect_witnesses) {
                    out.p = s;
                    return out;
                }
                out.witnesses.emplace_back(mask);
            }
            if (s == 0) break;
            mask = quasi_detail::next_subset(mask);
            if (mask > g.vertex_mask()) break;
        }
        if (found) {
            out.p = s;
            return out;
        }
    }
    return out;
}

inline bool is_p_quasi_k_cyclic(const Graph& g, int p, int k) {
    if (p < 0) throw std::invalid_argument("is_p_quasi_k_cyclic: p must be >= 0");
    const Classification c = min_deletion_to_kcyclic(g, k, /*collect_witnesses=*/false);
    return c.feasible() && *c.p == p;
}

}  // namespace qzg
