#pragma once

#include "qzg/graph.hpp"

// Constructors for the named graph families. Vertex numbering is fixed so
// that reports are reproducible: hubs/centers are vertex 0, pendants and
// join vertices are appended after the existing vertices.

namespace qzg {

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: order must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

// Center is vertex 0.
inline Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: order must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::build(n, e);
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::build(n, e);
}

// t new degree-1 vertices, each adjacent to v, appended after the
// existing vertices.
inline Graph attach_pendants(const Graph& g, int v, int t) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("attach_pendants: attachment vertex out of range");
    if (t < 0) throw std::invalid_argument("attach_pendants: pendant count must be >= 0");
    if (g.order() + t > kMaxVertices)
        throw std::invalid_argument("attach_pendants: order would exceed 32 vertices");
    std::vector<std::pair<int, int>> e = g.edges();
    for (int i = 0; i < t; ++i) e.emplace_back(v, g.order() + i);
    return Graph::build(g.order() + t, e);
}

// Unicyclic maximizer: triangle with n-3 pendants at one vertex.
// Degrees (n-1, 2, 2, 1 x (n-3)).
inline Graph u3(int n) {
    if (n < 3) throw std::invalid_argument("u3: order must be >= 3");
    return attach_pendants(cycle(3), 0, n - 3);
}

// Bicyclic maximizer: two triangles sharing the edge 0-1, with n-4
// pendants at vertex 0. Degrees (n-1, 3, 2, 2, 1 x (n-4)).
inline Graph b33(int n) {
    if (n < 4) throw std::invalid_argument("b33: order must be >= 4");
    Graph base = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    return attach_pendants(base, 0, n - 4);
}

// Tricyclic M2 maximizer: K4 with n-4 pendants at one vertex.
// Degrees (n-1, 3, 3, 3, 1 x (n-4)).
inline Graph k4_pendant(int n) {
    if (n < 4) throw std::invalid_argument("k4_pendant: order must be >= 4");
    return attach_pendants(complete(4), 0, n - 4);
}

// The other tricyclic M1 maximizer: three triangles sharing the edge 0-1
// (the 3-book), with n-5 pendants at vertex 0.
// Degrees (n-1, 4, 2, 2, 2, 1 x (n-5)).
inline Graph book3_pendant(int n) {
    if (n < 5) throw std::invalid_argument("book3_pendant: order must be >= 5");
    Graph base = Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
    return attach_pendants(base, 0, n - 5);
}

// G + K_p: p new mutually adjacent vertices, each adjacent to all of G.
// p = 0 is the identity.
inline Graph join_with_complete(const Graph& g, int p) {
    if (p < 0) throw std::invalid_argument("join_with_complete: p must be >= 0");
    if (g.order() + p > kMaxVertices)
        throw std::invalid_argument("join_with_complete: order would exceed 32 vertices");
    if (p == 0) return g;
    return g.join(complete(p));
}

}  // namespace qzg
