#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qzg/graph.hpp"
#include "qzg/graph6.hpp"

// Exact canonical forms for graphs of at most 12 vertices.
//
// The canonical form is the minimal graph6-order adjacency encoding over
// all vertex permutations (for the colored variant, over all permutations
// that place undistinguished vertices before distinguished ones). The
// minimum is located by a depth-first branch-and-bound over vertex
// orderings: at depth d the column bits x(0,d)...x(d-1,d) of the candidate
// vertex are compared against the best known column, branches that exceed
// it are cut, and leaf orderings that reproduce the best encoding yield
// automorphisms which are then used to skip equivalent siblings.

namespace qzg {

inline constexpr int kCanonCap = 12;

using Permutation = std::array<std::uint8_t, kMaxVertices>;

// Equitable partition of the vertices, classes canonically ordered (initial
// grouping by degree ascending, splits ordered by neighbor-count signature).
// The class index of a vertex is an isomorphism invariant.
inline std::vector<int> refinement_classes(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> classes;
    {
        std::map<int, std::uint32_t> by_degree;
        for (int v = 0; v < n; ++v) by_degree[g.degree(v)] |= std::uint32_t{1} << v;
        for (auto& [d, mask] : by_degree) classes.push_back(mask);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint32_t> next;
        for (std::uint32_t cmask : classes) {
            if (std::popcount(cmask) == 1) {
                next.push_back(cmask);
                continue;
            }
            std::map<std::vector<int>, std::uint32_t> split;
            for (std::uint32_t m = cmask; m;) {
                const int v = pop_lowest(m);
                std::vector<int> sig;
                sig.reserve(classes.size());
                for (std::uint32_t other : classes)
                    sig.push_back(std::popcount(g.neighbors(v) & other));
                split[sig] |= std::uint32_t{1} << v;
            }
            if (split.size() > 1) changed = true;
            for (auto& [sig, mask] : split) next.push_back(mask);
        }
        classes = std::move(next);
    }
    std::vector<int> ids(n, 0);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::uint32_t m = classes[c]; m;) ids[pop_lowest(m)] = static_cast<int>(c);
    return ids;
}

namespace canon_detail {

struct AutRecord {
    Permutation map;
    std::uint32_t fixed;  // bitmask of fixed points
};

class MinCodeSearch {
public:
    MinCodeSearch(const Graph& g, std::uint32_t colored) : n_(g.order()), colored_(colored) {
        for (int v = 0; v < n_; ++v) {
            rows_[v] = g.neighbors(v);
            deg_[v] = std::popcount(rows_[v]);
        }
        all_ = g.vertex_mask();
    }

    // Vertex order realizing the minimal encoding (position -> vertex).
    Permutation run() {
        best_key_.fill(kInf);
        best_perm_.fill(0);
        if (n_ > 0) dfs(0, false);
        return best_perm_;
    }

private:
    static constexpr std::uint32_t kInf = 0xFFFFFFFFu;

    void dfs(int depth, bool improved) {
        if (depth == n_) {
            if (improved) {
                best_perm_ = path_;
                have_best_ = true;
            } else if (have_best_) {
                record_automorphism();
            }
            return;
        }

        // Candidate keys: color bit (most significant) then the column bits
        // of the candidate against the vertices already placed.
        int cand_n = 0;
        std::array<std::uint8_t, kCanonCap> cand;
        std::array<std::uint32_t, kCanonCap> key;
        for (std::uint32_t rem = all_ & ~used_; rem;) {
            const int v = pop_lowest(rem);
            std::uint32_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = (col << 1) | ((rows_[path_[i]] >> v) & 1u);
            col |= ((colored_ >> v) & 1u) << depth;
            cand[cand_n] = static_cast<std::uint8_t>(v);
            key[cand_n] = col;
            ++cand_n;
        }
        // Ascending (key, degree, vertex); low degree first tends to reach
        // small encodings early.
        for (int i = 1; i < cand_n; ++i) {
            const std::uint8_t cv = cand[i];
            const std::uint32_t ck = key[i];
            int j = i - 1;
            while (j >= 0 && (key[j] > ck || (key[j] == ck && deg_[cand[j]] > deg_[cv]))) {
                cand[j + 1] = cand[j];
                key[j + 1] = key[j];
                --j;
            }
            cand[j + 1] = cv;
            key[j + 1] = ck;
        }

        std::uint32_t tried = 0;
        for (int i = 0; i < cand_n; ++i) {
            const int v = cand[i];
            if (key[i] > best_key_[depth]) break;  // sorted: the rest only get worse
            bool imp = improved;
            if (key[i] < best_key_[depth]) {
                best_key_[depth] = key[i];
                for (int d = depth + 1; d < n_; ++d) best_key_[d] = kInf;
                have_best_ = false;
                imp = true;
            }
            if (tried && equivalent_to_tried(v, tried)) {
                tried |= std::uint32_t{1} << v;
                continue;
            }
            path_[depth] = static_cast<std::uint8_t>(v);
            used_ |= std::uint32_t{1} << v;
            dfs(depth + 1, imp);
            used_ &= ~(std::uint32_t{1} << v);
            tried |= std::uint32_t{1} << v;
        }
    }

    // True if a recorded automorphism fixes the current path pointwise and
    // maps v onto an already-tried sibling; the subtree under v would then
    // repeat an explored subtree bit for bit.
    bool equivalent_to_tried(int v, std::uint32_t tried) const {
        for (const AutRecord& a : autos_) {
            if ((used_ & ~a.fixed) != 0) continue;
            if ((tried >> a.map[v]) & 1u) return true;
        }
        return false;
    }

    void record_automorphism() {
        if (autos_.size() >= 64) return;  // pruning stays correct without more
        AutRecord rec;
        std::uint32_t fixed = 0;
        bool identity = true;
        for (int i = 0; i < n_; ++i) {
            rec.map[best_perm_[i]] = path_[i];
            if (best_perm_[i] == path_[i])
                fixed |= std::uint32_t{1} << best_perm_[i];
            else
                identity = false;
        }
        if (identity) return;
        rec.fixed = fixed;
        autos_.push_back(rec);
    }

    int n_;
    std::uint32_t colored_;
    std::uint32_t all_ = 0;
    std::uint32_t used_ = 0;
    std::array<std::uint32_t, kMaxVertices> rows_{};
    std::array<std::uint8_t, kMaxVertices> deg_{};
    Permutation path_{};
    Permutation best_perm_{};
    std::array<std::uint32_t, kMaxVertices> best_key_{};
    bool have_best_ = false;
    std::vector<AutRecord> autos_;
};

inline std::string relabeled_graph6(const Graph& g, const Permutation& order) {
    // order maps position -> vertex; permuted() wants vertex -> position.
    std::vector<int> inv(g.order());
    for (int i = 0; i < g.order(); ++i) inv[order[i]] = i;
    return to_graph6(g.permuted(inv));
}

inline void check_cap(const Graph& g, const char* who) {
    if (g.order() > kCanonCap)
        throw std::invalid_argument(std::string(who) + ": order exceeds the 12-vertex cap");
}

}  // namespace canon_detail

// Canonical form: identical for isomorphic graphs, distinct otherwise.
// Returned as the graph6 line of the canonically relabeled graph.
inline std::string canonical_form(const Graph& g) {
    canon_detail::check_cap(g, "canonical_form");
    const Permutation order = canon_detail::MinCodeSearch(g, 0).run();
    return canon_detail::relabeled_graph6(g, order);
}

// Canonical form of the pair (graph, distinguished vertex set): equal for
// two sets exactly when some automorphism maps one onto the other.
// Distinguished vertices are placed last in the minimized ordering.
inline std::string canonical_form_colored(const Graph& g, VertexSet distinguished) {
    canon_detail::check_cap(g, "canonical_form_colored");
    if ((distinguished.bits() & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("canonical_form_colored: set exceeds vertex range");
    const Permutation order = canon_detail::MinCodeSearch(g, distinguished.bits()).run();
    return canon_detail::relabeled_graph6(g, order);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    canon_detail::check_cap(a, "is_isomorphic");
    canon_detail::check_cap(b, "is_isomorphic");
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

// The full automorphism group, found by mapping vertices in index order
// onto candidates of the same refinement class with consistent adjacency.
// Identity included; deterministic order.
inline std::vector<Permutation> automorphisms(const Graph& g) {
    canon_detail::check_cap(g, "automorphisms");
    const int n = g.order();
    std::vector<Permutation> out;
    if (n == 0) {
        out.push_back(Permutation{});
        return out;
    }
    const std::vector<int> cls = refinement_classes(g);
    std::array<std::uint32_t, kMaxVertices> rows{};
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);

    Permutation sigma{};
    std::uint32_t used = 0;

    auto dfs = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(sigma);
            return;
        }
        // images of the already-mapped neighbors of v
        std::uint32_t req = 0;
        std::uint32_t low = rows[v] & mask_of_n(v);
        while (low) req |= std::uint32_t{1} << sigma[pop_lowest(low)];
        const std::uint32_t placed = mask_of_n(n) & used;
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1u) continue;
            if (cls[u] != cls[v]) continue;
            if ((rows[u] & placed) != req) continue;
            sigma[v] = static_cast<std::uint8_t>(u);
            used |= std::uint32_t{1} << u;
            self(self, v + 1);
            used &= ~(std::uint32_t{1} << u);
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace qzg
