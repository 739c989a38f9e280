// Acceptance battery: exhaustive desk-scale verification of the extremal
// claims, the closed-form bounds and their equality characterization, the
// misprint reproduction, and the enumeration/property substrate. Prints
// one pass/fail line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qzg/bounds.hpp"
#include "qzg/canon.hpp"
#include "qzg/enumerate.hpp"
#include "qzg/families.hpp"
#include "qzg/graph6.hpp"
#include "qzg/quasi.hpp"
#include "qzg/zagreb.hpp"

using namespace qzg;

namespace {

using Levels = std::vector<std::vector<Graph>>;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::string canon_join(const Graph& base, int p) {
    return canonical_form(join_with_complete(base, p));
}

// Criteria 1-4: unique extremal families per cyclomatic class, with the
// exact closed-form maxima.
Outcome extremal_family_criterion(const Levels& levels, int k, int n_lo,
                                  const char* family_name) {
    Outcome out;
    std::uint64_t classes = 0;
    for (int n = n_lo; n <= 9; ++n) {
        const ExtremalReport r = extremal_search_over(levels[n], n, 0, k);
        classes += r.class_size;
        std::vector<Graph> expect_m1, expect_m2;
        std::int64_t want_m1 = 0, want_m2 = 0;
        switch (k) {
            case 0:
                expect_m1 = expect_m2 = {star(n)};
                want_m1 = std::int64_t{n} * (n - 1);
                want_m2 = std::int64_t{n - 1} * (n - 1);
                break;
            case 1:
                expect_m1 = expect_m2 = {u3(n)};
                want_m1 = std::int64_t{n - 1} * (n - 1) + n + 5;
                want_m2 = std::int64_t{n} * n + 3;
                break;
            case 2:
                expect_m1 = expect_m2 = {b33(n)};
                want_m1 = std::int64_t{n - 1} * (n - 1) + n + 13;
                want_m2 = std::int64_t{n} * n + 2 * n + 9;
                break;
            case 3:
                expect_m1 = {k4_pendant(n), book3_pendant(n)};
                expect_m2 = {k4_pendant(n)};
                want_m1 = std::int64_t{n - 1} * (n - 1) + n + 23;
                want_m2 = std::int64_t{n} * n + 4 * n + 22;
                break;
        }
        if (r.max_m1 != want_m1)
            out.fail("n=" + std::to_string(n) + ": max m1 " + std::to_string(r.max_m1) +
                     " != " + std::to_string(want_m1));
        if (r.max_m2 != want_m2)
            out.fail("n=" + std::to_string(n) + ": max m2 " + std::to_string(r.max_m2) +
                     " != " + std::to_string(want_m2));
        if (!verify_uniqueness(r, expect_m1, IndexSelector::m1).ok)
            out.fail("n=" + std::to_string(n) + ": m1 argmax is not exactly the expected set");
        if (!verify_uniqueness(r, expect_m2, IndexSelector::m2).ok)
            out.fail("n=" + std::to_string(n) + ": m2 argmax is not exactly the expected set");
    }
    if (out.pass) {
        std::ostringstream os;
        os << family_name << " uniquely extremal for n=" << n_lo << "..9, " << classes
           << " class members swept";
        out.detail = os.str();
    }
    return out;
}

// Criterion 5: both corrected bounds hold over every (G, S, k) with n <= 8,
// and tightness in either index happens exactly at joins.
Outcome bound_soundness(const Levels& levels) {
    Outcome out;
    std::uint64_t pairs = 0, tight = 0;
    for (int n = 1; n <= 8 && out.pass; ++n) {
        for (const Graph& g : levels[n]) {
            for (std::uint32_t mask = 0; mask < (1u << n) && out.pass; ++mask) {
                if (std::popcount(mask) == n) continue;
                for (int k = 0; k <= 3; ++k) {
                    if (!quasi_detail::remainder_is_kcyclic(g, mask, k)) continue;
                    ++pairs;
                    const BoundReport r = check_bound_for_witness(g, VertexSet(mask), k);
                    if (r.realized_m1 > r.bound_m1 || r.realized_m2 > r.bound_m2) {
                        out.fail("bound violated on " + to_graph6(g));
                        break;
                    }
                    if (r.tight_m1 != r.is_join || r.tight_m2 != r.is_join) {
                        out.fail("tightness/join mismatch on " + to_graph6(g));
                        break;
                    }
                    if (r.is_join) ++tight;
                }
            }
        }
    }
    if (out.pass)
        out.detail = std::to_string(pairs) + " (G,S,k) witnesses checked, " +
                     std::to_string(tight) + " tight, zero exceptions";
    return out;
}

// Criterion 6: the misprint in the displayed m2 bound is reproduced and
// the corrected form is exact on the same pair.
Outcome erratum_reproduction(const Levels& levels) {
    Outcome out;
    const BoundSweepResult printed = bound_sweep(levels[5], 2, 0, M2Variant::as_printed);
    bool found = false;
    for (const BoundViolation& v : printed.violations)
        if (v.index == "m2" && v.realized == 120 && v.bound == 108 &&
            is_isomorphic(parse_graph6(v.graph6), join_with_complete(star(3), 2)))
            found = true;
    if (!found) out.fail("expected violation 120 > 108 on S3+K2 not reported");

    const BoundSweepResult corrected = bound_sweep(levels[5], 2, 0, M2Variant::corrected);
    if (!corrected.violations.empty()) out.fail("corrected variant reported violations");
    bool tight_on_join = false;
    for (const std::string& g6 : corrected.tight)
        if (g6 == canon_join(star(3), 2)) tight_on_join = true;
    if (!tight_on_join) out.fail("corrected variant not tight on S3+K2");
    if (out.pass)
        out.detail = "as-printed variant violated (120 > 108 on S3+K2), corrected variant "
                     "exact and tight there";
    return out;
}

// Criterion 7: the join families are extremal in the deletion classes.
Outcome join_families(const Levels& levels) {
    Outcome out;
    int combos = 0;
    auto run = [&](int n, int p, int k, const std::vector<Graph>& exp_m1,
                   const std::vector<Graph>& exp_m2) {
        const ExtremalReport r = extremal_search_over(levels[n], n, p, k);
        ++combos;
        if (!verify_uniqueness(r, exp_m1, IndexSelector::m1).ok)
            out.fail("m1 argmax mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                     " k=" + std::to_string(k));
        if (!verify_uniqueness(r, exp_m2, IndexSelector::m2).ok)
            out.fail("m2 argmax mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p) +
                     " k=" + std::to_string(k));
    };
    for (int p = 1; p <= 2; ++p) {
        for (int n = p + 2; n <= 9; ++n)
            run(n, p, 0, {join_with_complete(star(n - p), p)},
                {join_with_complete(star(n - p), p)});
        for (int n = p + 3; n <= 9; ++n)
            run(n, p, 1, {join_with_complete(u3(n - p), p)},
                {join_with_complete(u3(n - p), p)});
        for (int n = p + 4; n <= 9; ++n)
            run(n, p, 2, {join_with_complete(b33(n - p), p)},
                {join_with_complete(b33(n - p), p)});
    }
    for (int n = 6; n <= 9; ++n)
        run(n, 1, 3,
            {join_with_complete(k4_pendant(n - 1), 1), join_with_complete(book3_pendant(n - 1), 1)},
            {join_with_complete(k4_pendant(n - 1), 1)});
    if (out.pass)
        out.detail = std::to_string(combos) + " (n,p,k) combinations, argmax equals the stated "
                     "joins everywhere";
    return out;
}

// Criterion 8: enumeration counts against the independent labeled oracle,
// plus stability across repeated runs and worker partitionings.
Outcome enumeration_oracle(const Levels& levels) {
    Outcome out;
    const std::uint64_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n)
        if (levels[n].size() != expected[n])
            out.fail("count mismatch at n=" + std::to_string(n));
    for (int n = 1; n <= 7; ++n)
        if (oracles::labeled_connected_class_count(n) != expected[n])
            out.fail("labeled oracle disagrees at n=" + std::to_string(n));

    // fresh runs reproduce the same streams
    std::vector<std::string> run1, run2;
    for_each_connected(7, [&](const Graph& g) { run1.push_back(to_graph6(g)); });
    for_each_connected(7, [&](const Graph& g) { run2.push_back(to_graph6(g)); });
    if (run1 != run2) out.fail("n=7 stream differs between runs");
    if (run1.size() != 853) out.fail("n=7 fresh count drifted");
    if (enumerate_connected(8).size() != 11117) out.fail("n=8 fresh count drifted");

    // worker partitionings merge to identical reports
    const ExtremalReport base7 = extremal_search(7, 1, 1, 1);
    const ExtremalReport base8 = extremal_search(8, 1, 1, 1);
    for (int workers : {2, 3, 4}) {
        if (!(extremal_search(7, 1, 1, workers) == base7))
            out.fail("n=7 report differs at workers=" + std::to_string(workers));
        if (!(extremal_search(8, 1, 1, workers) == base8))
            out.fail("n=8 report differs at workers=" + std::to_string(workers));
    }
    if (out.pass)
        out.detail = "counts 1,1,2,6,21,112,853,11117 match the labeled oracle (n<=7) and are "
                     "stable across runs and workers";
    return out;
}

// Criterion 9: property suites over every enumerated graph with n <= 8.
Outcome property_battery(const Levels& levels) {
    Outcome out;
    std::mt19937 rng(20240601);
    std::uint64_t graphs = 0;
    for (int n = 1; n <= 8 && out.pass; ++n) {
        for (const Graph& g : levels[n]) {
            ++graphs;
            int degree_sum = 0;
            for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
            if (degree_sum != 2 * g.edge_count()) {
                out.fail("handshake fails on " + to_graph6(g));
                break;
            }
            if (parse_graph6(to_graph6(g)) != g) {
                out.fail("graph6 round trip fails on " + to_graph6(g));
                break;
            }
            if (m1(g) != oracles::edge_sum_m1(g)) {
                out.fail("edge-sum identity fails on " + to_graph6(g));
                break;
            }
        }
    }
    // canonical invariance, 100 random relabelings per graph
    for (int n = 1; n <= 8 && out.pass; ++n) {
        for (const Graph& g : levels[n]) {
            const std::string canon = canonical_form(g);
            for (int trial = 0; trial < 100; ++trial) {
                if (canonical_form(g.permuted(oracles::random_permutation(rng, n))) != canon) {
                    out.fail("canonical form varies on " + to_graph6(g));
                    break;
                }
            }
        }
    }
    // disjoint-union additivity on random pairs
    for (int trial = 0; trial < 300 && out.pass; ++trial) {
        const auto& pool_a = levels[1 + rng() % 8];
        const auto& pool_b = levels[1 + rng() % 8];
        const Graph& a = pool_a[rng() % pool_a.size()];
        const Graph& b = pool_b[rng() % pool_b.size()];
        if (a.order() + b.order() > kMaxVertices) continue;
        const Graph u = a.disjoint_union(b);
        if (m1(u) != m1(a) + m1(b) || m2(u) != m2(a) + m2(b))
            out.fail("union additivity fails");
    }
    if (out.pass)
        out.detail = "handshake, graph6 round trip, edge-sum identity, canonical invariance "
                     "(100 relabelings each), union additivity over " +
                     std::to_string(graphs) + " graphs";
    return out;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    const auto t_start = clock::now();
    std::printf("building the shared enumeration substrate (n <= 9)...\n");
    const Levels levels = enumerate_connected_levels(9);
    std::printf("built %zu + %zu classes at n=8, n=9 in %.1fs\n\n", levels[8].size(),
                levels[9].size(),
                std::chrono::duration<double>(clock::now() - t_start).count());

    struct Criterion {
        const char* title;
        Outcome (*run)(const Levels&);
    };
    const Criterion criteria[] = {
        {"trees: star(n) uniquely maximizes both indices, maxima n(n-1) and (n-1)^2",
         [](const Levels& l) { return extremal_family_criterion(l, 0, 3, "star"); }},
        {"unicyclic: u3(n) uniquely maximizes both indices, maxima (n-1)^2+n+5 and n^2+3",
         [](const Levels& l) { return extremal_family_criterion(l, 1, 4, "u3"); }},
        {"bicyclic: b33(n) uniquely maximizes both indices, maxima (n-1)^2+n+13 and n^2+2n+9",
         [](const Levels& l) { return extremal_family_criterion(l, 2, 5, "b33"); }},
        {"tricyclic: m1 argmax is {k4_pendant, book3_pendant} at (n-1)^2+n+23, m2 argmax is "
         "{k4_pendant} at n^2+4n+22",
         [](const Levels& l) { return extremal_family_criterion(l, 3, 5, "k4/book3"); }},
        {"bound soundness: corrected bounds hold for every witness with n <= 8, tight iff join",
         bound_soundness},
        {"erratum: as-printed m2 bound violated on S3+K2 (120 > 108), corrected variant exact",
         erratum_reproduction},
        {"join families: star/u3/b33 joins unique for p in {1,2}, tricyclic joins at p=1",
         join_families},
        {"enumeration: counts match the labeled oracle and stay stable across runs/workers",
         enumeration_oracle},
        {"properties: handshake, round trip, edge-sum, canonical invariance, additivity",
         property_battery},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto t0 = clock::now();
        const Outcome result = c.run(levels);
        const double secs = std::chrono::duration<double>(clock::now() - t0).count();
        std::printf("%s  criterion %d: %s (%s) [%.1fs]\n", result.pass ? "PASS" : "FAIL", index,
                    c.title, result.detail.c_str(), secs);
        if (!result.pass) ++failures;
    }
    std::printf("\n%d/9 criteria passed in %.1fs total\n", 9 - failures,
                std::chrono::duration<double>(clock::now() - t_start).count());
    return failures;
}
