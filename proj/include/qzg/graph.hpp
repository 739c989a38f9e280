#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qzg {

inline constexpr int kMaxVertices = 32;

// Pops and returns the index of the lowest set bit.
inline int pop_lowest(std::uint32_t& m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    return v;
}

inline std::uint32_t mask_of_n(int n) {
    return static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
}

// A subset of the vertex range of some graph, stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint32_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { bits_ |= bit(v); }
    bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint32_t bits() const { return bits_; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (std::uint32_t m = bits_; m;) out.push_back(pop_lowest(m));
        return out;
    }

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

private:
    static std::uint32_t bit(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("VertexSet: vertex index out of range");
        return std::uint32_t{1} << v;
    }

    std::uint32_t bits_ = 0;
};

// Immutable simple undirected graph on vertices 0..order-1, one adjacency
// bit row per vertex. Rows are kept symmetric and irreflexive by
// construction; every "editing" operation returns a new graph.
class Graph {
public:
    Graph() = default;

    static Graph build(int order, const std::vector<std::pair<int, int>>& edges) {
        if (order < 0 || order > kMaxVertices)
            throw std::invalid_argument("Graph: order must be in [0, 32]");
        Graph g;
        g.n_ = order;
        for (auto [u, v] : edges) {
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw std::invalid_argument("Graph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("Graph: self-loops not allowed");
            g.rows_[u] |= std::uint32_t{1} << v;
            g.rows_[v] |= std::uint32_t{1} << u;
        }
        return g;
    }

    int order() const { return n_; }

    std::uint32_t vertex_mask() const { return mask_of_n(n_); }

    std::uint32_t neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[u] >> v) & 1u;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(rows_[v]);
    }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += std::popcount(rows_[v]);
        return total / 2;
    }

    // Sorted descending.
    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = std::popcount(rows_[v]);
        std::sort(d.begin(), d.end(), std::greater<int>());
        return d;
    }

    // Edge list as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            std::uint32_t higher = rows_[u] & ~mask_of_n(u + 1);
            while (higher) out.emplace_back(u, pop_lowest(higher));
        }
        return out;
    }

    // The empty graph (order 0) is decided disconnected.
    bool is_connected() const {
        if (n_ == 0) return false;
        std::uint32_t seen = 1u;
        std::uint32_t frontier = 1u;
        while (frontier) {
            std::uint32_t next = 0;
            while (frontier) next |= rows_[pop_lowest(frontier)];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == vertex_mask();
    }

    // m - n + 1; defined for connected graphs only.
    int cyclomatic_number() const {
        if (!is_connected())
            throw std::domain_error("cyclomatic_number: graph is not connected");
        return edge_count() - n_ + 1;
    }

    // Induced subgraph on the kept vertices, relabeled contiguously with
    // the original relative order preserved.
    Graph delete_vertices(VertexSet s) const {
        if ((s.bits() & ~vertex_mask()) != 0)
            throw std::invalid_argument("delete_vertices: set exceeds vertex range");
        if (s.size() >= n_)
            throw std::invalid_argument("delete_vertices: cannot delete every vertex");
        std::array<int, kMaxVertices> newid{};
        Graph out;
        out.n_ = n_ - s.size();
        int next = 0;
        for (int v = 0; v < n_; ++v)
            if (!s.contains(v)) newid[v] = next++;
        for (int v = 0; v < n_; ++v) {
            if (s.contains(v)) continue;
            std::uint32_t kept = rows_[v] & ~s.bits();
            while (kept) out.rows_[newid[v]] |= std::uint32_t{1} << newid[pop_lowest(kept)];
        }
        return out;
    }

    // Join: disjoint union plus every cross edge. Vertices of `h` are
    // appended after this graph's vertices.
    Graph join(const Graph& h) const {
        Graph out = disjoint_union(h);
        std::uint32_t mine = vertex_mask();
        std::uint32_t theirs = out.vertex_mask() & ~mine;
        for (int v = 0; v < n_; ++v) out.rows_[v] |= theirs;
        for (int v = n_; v < out.n_; ++v) out.rows_[v] |= mine;
        return out;
    }

    Graph disjoint_union(const Graph& h) const {
        if (n_ + h.n_ > kMaxVertices)
            throw std::invalid_argument("disjoint_union: combined order exceeds 32 vertices");
        Graph out;
        out.n_ = n_ + h.n_;
        for (int v = 0; v < n_; ++v) out.rows_[v] = rows_[v];
        for (int v = 0; v < h.n_; ++v)
            out.rows_[n_ + v] = static_cast<std::uint32_t>(std::uint64_t{h.rows_[v]} << n_);
        return out;
    }

    // Relabels by `perm`: edge (u, v) becomes (perm[u], perm[v]).
    Graph permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_)
            throw std::invalid_argument("permuted: permutation size mismatch");
        std::uint32_t hit = 0;
        for (int v : perm) {
            if (v < 0 || v >= n_) throw std::invalid_argument("permuted: index out of range");
            hit |= std::uint32_t{1} << v;
        }
        if (hit != vertex_mask())
            throw std::invalid_argument("permuted: not a permutation");
        Graph out;
        out.n_ = n_;
        for (int v = 0; v < n_; ++v) {
            std::uint32_t row = rows_[v];
            while (row) out.rows_[perm[v]] |= std::uint32_t{1} << perm[pop_lowest(row)];
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.rows_[v] != b.rows_[v]) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex index out of range");
    }

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> rows_{};
};

}  // namespace qzg
