#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qzg/canon.hpp"
#include "qzg/graph.hpp"
#include "qzg/quasi.hpp"
#include "qzg/zagreb.hpp"

// Exhaustive generation of connected graphs, one representative per
// isomorphism class, by canonical augmentation: every n-vertex class is
// produced by extending an (n-1)-vertex class representative with one new
// vertex. A child is kept only when
//   (a) its attachment set is the minimal member of its orbit under the
//       parent's automorphism group (no duplicate children per parent), and
//   (b) the new vertex lies in the canonical deletion orbit of the child:
//       among vertices whose removal leaves a connected graph, those
//       minimizing (degree, refinement class, vertex-distinguished
//       canonical form). Both criteria are isomorphism-invariant, so each
//       class is emitted exactly once, by exactly one (parent, set) pair.
//
// The emission order (parents in level order, attachment masks ascending)
// is deterministic; worker partitioning in the search operations splits
// parents and merges per-worker results into the same report.

namespace qzg {

inline constexpr int kEnumCap = 10;

namespace enum_detail {

inline std::uint32_t permute_bits(const Permutation& perm, std::uint32_t mask) {
    std::uint32_t out = 0;
    while (mask) out |= std::uint32_t{1} << perm[pop_lowest(mask)];
    return out;
}

// Parent plus one new vertex adjacent to `mask`.
inline Graph extend(const Graph& parent, std::uint32_t mask) {
    std::vector<std::pair<int, int>> e = parent.edges();
    const int w = parent.order();
    for (std::uint32_t m = mask; m;) e.emplace_back(pop_lowest(m), w);
    return Graph::build(w + 1, e);
}

inline bool connected_without(const Graph& g, int v) {
    return quasi_detail::remainder_connected(g, std::uint32_t{1} << v);
}

// Canonical-deletion acceptance test for a child whose newest vertex is
// the highest-numbered one.
inline bool accept_child(const Graph& c) {
    const int n = c.order();
    const int w = n - 1;
    if (n == 1) return true;

    std::uint32_t valid = std::uint32_t{1} << w;  // child minus w is the (connected) parent
    int min_deg = c.degree(w);
    for (int v = 0; v < w; ++v) {
        if (!connected_without(c, v)) continue;
        valid |= std::uint32_t{1} << v;
        if (c.degree(v) < min_deg) return false;  // w no longer minimal
        min_deg = std::min(min_deg, c.degree(v));
    }
    std::uint32_t tied = 0;
    for (std::uint32_t m = valid; m;) {
        const int v = pop_lowest(m);
        if (c.degree(v) == min_deg) tied |= std::uint32_t{1} << v;
    }
    if (tied == std::uint32_t{1} << w) return true;

    const std::vector<int> cls = refinement_classes(c);
    int min_cls = cls[w];
    for (std::uint32_t m = tied; m;) min_cls = std::min(min_cls, cls[pop_lowest(m)]);
    if (cls[w] > min_cls) return false;
    std::uint32_t tied2 = 0;
    for (std::uint32_t m = tied; m;) {
        const int v = pop_lowest(m);
        if (cls[v] == min_cls) tied2 |= std::uint32_t{1} << v;
    }
    if (tied2 == std::uint32_t{1} << w) return true;

    const std::string sw = canonical_form_colored(c, VertexSet(std::uint32_t{1} << w));
    for (std::uint32_t m = tied2 & ~(std::uint32_t{1} << w); m;) {
        const int v = pop_lowest(m);
        if (canonical_form_colored(c, VertexSet(std::uint32_t{1} << v)) < sw) return false;
    }
    return true;
}

template <typename F>
void children_of(const Graph& parent, F&& emit) {
    const std::vector<Permutation> auts = automorphisms(parent);
    const bool trivial_group = auts.size() <= 1;
    const std::uint32_t full = parent.vertex_mask();
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!trivial_group) {
            bool minimal = true;
            for (const Permutation& s : auts) {
                if (permute_bits(s, mask) < mask) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
        }
        Graph child = extend(parent, mask);
        if (accept_child(child)) emit(child);
    }
}

inline void check_enum_cap(int n) {
    if (n < 1 || n > kEnumCap)
        throw std::invalid_argument("enumerate: order must be in [1, 10]");
}

}  // namespace enum_detail

// Streams the accepted children of one parent class representative, in
// ascending attachment-mask order. Children of distinct parents cover
// disjoint class sets, so callers may partition parents across workers and
// reassemble per-parent results in parent order.
template <typename F>
void for_each_child(const Graph& parent, F&& f) {
    enum_detail::children_of(parent, std::forward<F>(f));
}

// Streams one representative per isomorphism class of connected graphs on
// n vertices, in a fixed deterministic order.
template <typename F>
void for_each_connected(int n, F&& f) {
    enum_detail::check_enum_cap(n);
    Graph k1 = Graph::build(1, {});
    if (n == 1) {
        f(k1);
        return;
    }
    std::vector<Graph> level{k1};
    for (int m = 2; m < n; ++m) {
        std::vector<Graph> next;
        for (const Graph& p : level)
            enum_detail::children_of(p, [&](const Graph& c) { next.push_back(c); });
        level = std::move(next);
    }
    for (const Graph& p : level) enum_detail::children_of(p, f);
}

inline std::vector<Graph> enumerate_connected(int n) {
    std::vector<Graph> out;
    for_each_connected(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// All levels 1..n in one build; levels[i] holds the classes on i vertices.
inline std::vector<std::vector<Graph>> enumerate_connected_levels(int n) {
    enum_detail::check_enum_cap(n);
    std::vector<std::vector<Graph>> levels(n + 1);
    levels[1] = {Graph::build(1, {})};
    for (int m = 2; m <= n; ++m)
        for (const Graph& p : levels[m - 1])
            enum_detail::children_of(p, [&](const Graph& c) { levels[m].push_back(c); });
    return levels;
}

template <typename F>
void for_each_kcyclic(int n, int k, F&& f) {
    for_each_connected(n, [&](const Graph& g) {
        if (g.cyclomatic_number() == k) f(g);
    });
}

inline std::vector<Graph> enumerate_kcyclic(int n, int k) {
    std::vector<Graph> out;
    for_each_kcyclic(n, k, [&](const Graph& g) { out.push_back(g); });
    return out;
}

template <typename F>
void for_each_quasi_class(int n, int p, int k, F&& f) {
    for_each_connected(n, [&](const Graph& g) {
        if (is_p_quasi_k_cyclic(g, p, k)) f(g);
    });
}

inline std::vector<Graph> enumerate_quasi_class(int n, int p, int k) {
    std::vector<Graph> out;
    for_each_quasi_class(n, p, k, [&](const Graph& g) { out.push_back(g); });
    return out;
}

enum class IndexSelector { m1, m2, both };

struct ExtremalReport {
    int n = 0;
    int p = 0;
    int k = 0;
    std::int64_t max_m1 = 0;
    std::int64_t max_m2 = 0;
    std::vector<std::string> argmax_m1;  // canonical graph6, sorted
    std::vector<std::string> argmax_m2;
    std::uint64_t class_size = 0;

    friend bool operator==(const ExtremalReport& a, const ExtremalReport& b) {
        return a.n == b.n && a.p == b.p && a.k == b.k && a.max_m1 == b.max_m1 &&
               a.max_m2 == b.max_m2 && a.argmax_m1 == b.argmax_m1 &&
               a.argmax_m2 == b.argmax_m2 && a.class_size == b.class_size;
    }
};

namespace enum_detail {

struct ExtremalAcc {
    std::int64_t max1 = -1;
    std::int64_t max2 = -1;
    std::set<std::string> arg1;
    std::set<std::string> arg2;
    std::uint64_t count = 0;

    void feed(const Graph& g, int p, int k) {
        if (!is_p_quasi_k_cyclic(g, p, k)) return;
        ++count;
        const IndexPair ip = index_pair(g);
        if (ip.m1 > max1) {
            max1 = ip.m1;
            arg1 = {canonical_form(g)};
        } else if (ip.m1 == max1) {
            arg1.insert(canonical_form(g));
        }
        if (ip.m2 > max2) {
            max2 = ip.m2;
            arg2 = {canonical_form(g)};
        } else if (ip.m2 == max2) {
            arg2.insert(canonical_form(g));
        }
    }

    void merge(const ExtremalAcc& o) {
        count += o.count;
        if (o.max1 > max1) {
            max1 = o.max1;
            arg1 = o.arg1;
        } else if (o.max1 == max1) {
            arg1.insert(o.arg1.begin(), o.arg1.end());
        }
        if (o.max2 > max2) {
            max2 = o.max2;
            arg2 = o.arg2;
        } else if (o.max2 == max2) {
            arg2.insert(o.arg2.begin(), o.arg2.end());
        }
    }
};

inline ExtremalReport finish_report(ExtremalAcc& acc, int n, int p, int k) {
    if (acc.count == 0)
        throw std::domain_error("extremal_search: the class is empty");
    ExtremalReport r;
    r.n = n;
    r.p = p;
    r.k = k;
    r.max_m1 = acc.max1;
    r.max_m2 = acc.max2;
    r.argmax_m1.assign(acc.arg1.begin(), acc.arg1.end());
    r.argmax_m2.assign(acc.arg2.begin(), acc.arg2.end());
    r.class_size = acc.count;
    return r;
}

inline void check_order_constraint(int n, int p, int k) {
    if (p < 0 || k < 0) throw std::invalid_argument("extremal_search: p and k must be >= 0");
    // k + 2 is the order of the smallest extremal family member for k <= 3;
    // beyond that fall back to plain feasibility.
    const int min_base = k <= 3 ? k + 2 : min_kcyclic_order(k);
    if (n < p + min_base)
        throw std::invalid_argument("extremal_search: order constraint violated (n too small)");
}

}  // namespace enum_detail

// Maxima and complete argmax sets of both Zagreb indices over the class of
// p-quasi k-cyclic graphs on n vertices.
inline ExtremalReport extremal_search(int n, int p, int k, int workers = 1) {
    enum_detail::check_enum_cap(n);
    enum_detail::check_order_constraint(n, p, k);
    if (workers < 1) throw std::invalid_argument("extremal_search: workers must be >= 1");
    enum_detail::ExtremalAcc acc;
    if (workers == 1 || n <= 2) {
        for_each_connected(n, [&](const Graph& g) { acc.feed(g, p, k); });
        return enum_detail::finish_report(acc, n, p, k);
    }
    const std::vector<Graph> parents = enumerate_connected(n - 1);
    std::vector<enum_detail::ExtremalAcc> accs(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < parents.size(); i += workers)
                enum_detail::children_of(parents[i],
                                         [&](const Graph& c) { accs[w].feed(c, p, k); });
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& a : accs) acc.merge(a);
    return enum_detail::finish_report(acc, n, p, k);
}

// Same search over an externally supplied graph list (e.g. parsed from a
// graph6 file) instead of the built-in enumerator.
inline ExtremalReport extremal_search_over(const std::vector<Graph>& graphs, int n, int p, int k,
                                           int workers = 1) {
    enum_detail::check_order_constraint(n, p, k);
    if (workers < 1) throw std::invalid_argument("extremal_search_over: workers must be >= 1");
    for (const Graph& g : graphs)
        if (g.order() != n)
            throw std::invalid_argument("extremal_search_over: graph order mismatch");
    std::vector<enum_detail::ExtremalAcc> accs(std::max(workers, 1));
    if (workers == 1) {
        for (const Graph& g : graphs) accs[0].feed(g, p, k);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i = w; i < graphs.size(); i += workers)
                    accs[w].feed(graphs[i], p, k);
            });
        }
        for (auto& t : threads) t.join();
    }
    enum_detail::ExtremalAcc acc;
    for (const auto& a : accs) acc.merge(a);
    return enum_detail::finish_report(acc, n, p, k);
}

struct UniquenessVerdict {
    bool ok = false;
    std::string detail;
    std::vector<std::string> counterexamples;  // graph6 of offending classes
};

// Confirms that the report's argmax set equals the expected set exactly;
// completeness of the report's argmax already certifies that every
// non-member is strictly below the maximum.
inline UniquenessVerdict verify_uniqueness(const ExtremalReport& report,
                                           const std::vector<Graph>& expected,
                                           IndexSelector which = IndexSelector::both) {
    std::set<std::string> want;
    for (const Graph& g : expected) want.insert(canonical_form(g));
    UniquenessVerdict v;
    v.ok = true;
    auto compare = [&](const std::vector<std::string>& got, const char* label) {
        const std::set<std::string> got_set(got.begin(), got.end());
        if (got_set == want) return;
        v.ok = false;
        v.detail += std::string(v.detail.empty() ? "" : "; ") + label + " argmax mismatch";
        for (const std::string& s : got)
            if (!want.count(s)) v.counterexamples.push_back(s);
        for (const std::string& s : want)
            if (!got_set.count(s)) v.counterexamples.push_back(s);
    };
    if (which != IndexSelector::m2) compare(report.argmax_m1, "m1");
    if (which != IndexSelector::m1) compare(report.argmax_m2, "m2");
    if (v.ok) v.detail = "argmax matches expected set";
    return v;
}

}  // namespace qzg
