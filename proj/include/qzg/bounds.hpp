#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qzg/canon.hpp"
#include "qzg/enumerate.hpp"
#include "qzg/families.hpp"
#include "qzg/graph.hpp"
#include "qzg/graph6.hpp"
#include "qzg/quasi.hpp"
#include "qzg/zagreb.hpp"

// Closed-form upper bounds for the Zagreb indices of a graph G with a
// deletion set S of size p whose remainder G-S is connected k-cyclic on
// n-p vertices:
//
//   M1(G) <= M1(G-S) + p(4k + n^2 + 2n + p(n-4) - p^2 - 3)
//   M2(G) <= M2(G-S) + p M1(G-S) + (k+n-p-1)(p^2 + 2p(n-1))
//            + p(p-1)(n-1)^2/2 + p^2(n-p)(n-1)
//
// with equality in each exactly when G is isomorphic to (G-S) + K_p.
//
// The quadratic factor (n-1)^2 in the M2 pairwise term is the `corrected`
// variant. The `as_printed` variant uses the linear factor (n-1) instead;
// it is demonstrably violated for p >= 2 (e.g. S_3 + K_2 with its two
// join vertices deleted realizes 120 against a printed bound of 108) and
// is kept callable so the discrepancy stays reproducible.

namespace qzg {

struct BoundParams {
    int n = 0;
    int p = 0;
    int k = 0;
    std::int64_t m1_base = 0;
    std::int64_t m2_base = 0;
};

enum class M2Variant { corrected, as_printed };

namespace bounds_detail {

inline void validate(const BoundParams& q) {
    if (q.p < 0 || q.n <= q.p)
        throw std::invalid_argument("bounds: need n > p >= 0");
    if (q.k < 0) throw std::invalid_argument("bounds: need k >= 0");
    if (q.m1_base < 0 || q.m2_base < 0)
        throw std::invalid_argument("bounds: base indices must be nonnegative");
}

}  // namespace bounds_detail

inline std::int64_t bound_m1(const BoundParams& q) {
    bounds_detail::validate(q);
    const std::int64_t n = q.n, p = q.p, k = q.k;
    return q.m1_base + p * (4 * k + n * n + 2 * n + p * (n - 4) - p * p - 3);
}

inline std::int64_t bound_m2(const BoundParams& q, M2Variant variant = M2Variant::corrected) {
    bounds_detail::validate(q);
    const std::int64_t n = q.n, p = q.p, k = q.k;
    const std::int64_t pairwise = variant == M2Variant::corrected
                                      ? p * (p - 1) * (n - 1) * (n - 1) / 2
                                      : p * (p - 1) * (n - 1) / 2;
    return q.m2_base + p * q.m1_base + (k + n - p - 1) * (p * p + 2 * p * (n - 1)) + pairwise +
           p * p * (n - p) * (n - 1);
}

// Cross-adjacency profile of a deletion set: for every remainder vertex
// the number of its neighbors inside S, and for every S vertex its total
// degree in G. These are the quantities the bounds cap at p and n-1.
struct CrossDegreeProfile {
    std::vector<int> remainder_cross;  // kept vertices, ascending original index
    std::vector<int> deleted_degrees;  // S vertices, ascending original index
};

inline CrossDegreeProfile cross_degrees(const Graph& g, VertexSet s) {
    if ((s.bits() & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("cross_degrees: set exceeds vertex range");
    CrossDegreeProfile out;
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v))
            out.deleted_degrees.push_back(g.degree(v));
        else
            out.remainder_cross.push_back(std::popcount(g.neighbors(v) & s.bits()));
    }
    return out;
}

struct BoundReport {
    std::int64_t bound_m1 = 0;
    std::int64_t realized_m1 = 0;
    std::int64_t bound_m2 = 0;
    std::int64_t realized_m2 = 0;
    bool tight_m1 = false;
    bool tight_m2 = false;
    bool is_join = false;  // G isomorphic to (G-S) + K_p
};

// Evaluates both bounds for one (G, S) pair. The remainder must be
// connected with cyclomatic number k. The join test is an actual
// isomorphism check, independent of the tightness comparison.
inline BoundReport check_bound_for_witness(const Graph& g, VertexSet s, int k,
                                           M2Variant variant = M2Variant::corrected) {
    const Graph remainder = g.delete_vertices(s);
    if (!remainder.is_connected() || remainder.cyclomatic_number() != k)
        throw std::domain_error("check_bound_for_witness: remainder is not connected k-cyclic");
    const int p = s.size();
    const BoundParams params{g.order(), p, k, m1(remainder), m2(remainder)};
    BoundReport r;
    r.bound_m1 = bound_m1(params);
    r.bound_m2 = bound_m2(params, variant);
    const IndexPair ip = index_pair(g);
    r.realized_m1 = ip.m1;
    r.realized_m2 = ip.m2;
    r.tight_m1 = r.realized_m1 == r.bound_m1;
    r.tight_m2 = r.realized_m2 == r.bound_m2;
    // G + K_0 = G, so p = 0 is a join by convention; is_isomorphic agrees.
    r.is_join = p == 0 || is_isomorphic(g, join_with_complete(remainder, p));
    return r;
}

struct BoundViolation {
    std::string graph6;  // as-swept labeling, so witness indices apply to it
    VertexSet witness;
    std::string index;  // "m1" or "m2"
    std::int64_t bound = 0;
    std::int64_t realized = 0;
};

struct BoundSweepResult {
    std::uint64_t checked = 0;                // (G, S) pairs evaluated
    std::vector<BoundViolation> violations;   // bound exceeded, deterministic order
    std::vector<std::string> tight;           // canonical graph6 of graphs with a tight witness
};

// Runs check_bound_for_witness over every graph in `graphs` and every
// size-p subset whose remainder is connected k-cyclic.
inline BoundSweepResult bound_sweep(const std::vector<Graph>& graphs, int p, int k,
                                    M2Variant variant = M2Variant::corrected, int workers = 1) {
    if (p < 0 || k < 0) throw std::invalid_argument("bound_sweep: p and k must be >= 0");
    if (workers < 1) throw std::invalid_argument("bound_sweep: workers must be >= 1");

    struct Acc {
        std::uint64_t checked = 0;
        std::vector<std::pair<std::size_t, BoundViolation>> violations;
        std::set<std::string> tight;
    };
    std::vector<Acc> accs(workers);

    auto sweep_one = [&](std::size_t gi, Acc& acc) {
        const Graph& g = graphs[gi];
        if (p >= g.order()) return;
        std::uint32_t mask = p == 0 ? 0 : mask_of_n(p);
        for (;;) {
            if (quasi_detail::remainder_is_kcyclic(g, mask, k)) {
                ++acc.checked;
                const VertexSet s(mask);
                const BoundReport r = check_bound_for_witness(g, s, k, variant);
                if (r.realized_m1 > r.bound_m1)
                    acc.violations.push_back(
                        {gi, {to_graph6(g), s, "m1", r.bound_m1, r.realized_m1}});
                if (r.realized_m2 > r.bound_m2)
                    acc.violations.push_back(
                        {gi, {to_graph6(g), s, "m2", r.bound_m2, r.realized_m2}});
                if (r.tight_m1 && r.tight_m2) acc.tight.insert(canonical_form(g));
            }
            if (p == 0) break;
            mask = quasi_detail::next_subset(mask);
            if (mask > g.vertex_mask()) break;
        }
    };

    if (workers == 1) {
        for (std::size_t gi = 0; gi < graphs.size(); ++gi) sweep_one(gi, accs[0]);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t gi = w; gi < graphs.size(); gi += workers)
                    sweep_one(gi, accs[w]);
            });
        }
        for (auto& t : threads) t.join();
    }

    BoundSweepResult out;
    std::vector<std::pair<std::size_t, BoundViolation>> merged;
    std::set<std::string> tight;
    for (auto& acc : accs) {
        out.checked += acc.checked;
        merged.insert(merged.end(), acc.violations.begin(), acc.violations.end());
        tight.insert(acc.tight.begin(), acc.tight.end());
    }
    std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.witness < b.second.witness;
    });
    for (auto& [gi, v] : merged) out.violations.push_back(std::move(v));
    out.tight.assign(tight.begin(), tight.end());
    return out;
}

struct JoinMaximalityVerdict {
    bool ok = false;
    std::int64_t max_join_m1 = 0;
    std::int64_t max_join_m2 = 0;
    std::vector<std::string> counterexamples;  // graph6
    std::string detail;
};

// Given candidate base graphs in C^k(n-p), takes the argmax families A for
// each index, forms their joins with K_p, and certifies over the whole
// class of p-quasi k-cyclic graphs on n = (n-p) + p vertices that every
// member outside the join set has a strictly smaller index and that the
// joins of the maximizers share one index value.
inline JoinMaximalityVerdict verify_join_maximality(const std::vector<Graph>& candidates, int p, int k,
                                          int workers = 1) {
    if (candidates.empty())
        throw std::invalid_argument("verify_join_maximality: empty candidate set");
    if (p < 0 || k < 0) throw std::invalid_argument("verify_join_maximality: p and k must be >= 0");
    const int base_order = candidates.front().order();
    for (const Graph& h : candidates) {
        if (h.order() != base_order)
            throw std::invalid_argument("verify_join_maximality: candidate orders differ");
        if (!h.is_connected() || h.cyclomatic_number() != k)
            throw std::invalid_argument("verify_join_maximality: candidate not connected k-cyclic");
    }
    const int n = base_order + p;

    std::int64_t best1 = -1, best2 = -1;
    for (const Graph& h : candidates) {
        best1 = std::max(best1, m1(h));
        best2 = std::max(best2, m2(h));
    }
    std::set<std::string> joins1, joins2;
    std::set<std::int64_t> join1_values, join2_values;
    for (const Graph& h : candidates) {
        if (m1(h) == best1) {
            const Graph j = join_with_complete(h, p);
            joins1.insert(canonical_form(j));
            join1_values.insert(m1(j));
        }
        if (m2(h) == best2) {
            const Graph j = join_with_complete(h, p);
            joins2.insert(canonical_form(j));
            join2_values.insert(m2(j));
        }
    }

    JoinMaximalityVerdict v;
    if (join1_values.size() != 1 || join2_values.size() != 1) {
        v.ok = false;
        v.detail = "joins of the maximizers do not share one index value";
        return v;
    }
    v.max_join_m1 = *join1_values.begin();
    v.max_join_m2 = *join2_values.begin();

    const ExtremalReport report = extremal_search(n, p, k, workers);
    v.ok = true;
    auto check = [&](const std::vector<std::string>& argmax, const std::set<std::string>& joins,
                     std::int64_t max_value, std::int64_t join_value, const char* label) {
        if (max_value > join_value) {
            v.ok = false;
            v.detail += std::string(v.detail.empty() ? "" : "; ") + label +
                        " maximum exceeds the candidate joins";
            for (const std::string& s : argmax)
                if (!joins.count(s)) v.counterexamples.push_back(s);
            return;
        }
        if (max_value < join_value) return;  // every class member is strictly below
        for (const std::string& s : argmax) {
            if (!joins.count(s)) {
                v.ok = false;
                v.detail += std::string(v.detail.empty() ? "" : "; ") + label +
                            " maximum attained outside the candidate joins";
                v.counterexamples.push_back(s);
            }
        }
    };
    check(report.argmax_m1, joins1, report.max_m1, v.max_join_m1, "m1");
    check(report.argmax_m2, joins2, report.max_m2, v.max_join_m2, "m2");
    if (v.ok) v.detail = "strict maximality certified over the enumerated class";
    return v;
}

}  // namespace qzg
