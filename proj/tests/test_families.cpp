#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "qzg/canon.hpp"
#include "qzg/families.hpp"
#include "qzg/zagreb.hpp"

using namespace qzg;

TEST_CASE("small coincidences") {
    CHECK(cycle(3) == complete(3));
    CHECK(path(2) == star(2));
    CHECK(star(2) == complete(2));
    CHECK(u3(3) == cycle(3));
    CHECK(k4_pendant(4) == complete(4));
}

TEST_CASE("constructor preconditions") {
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(star(0), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(u3(2), std::invalid_argument);
    CHECK_THROWS_AS(b33(3), std::invalid_argument);
    CHECK_THROWS_AS(k4_pendant(3), std::invalid_argument);
    CHECK_THROWS_AS(book3_pendant(4), std::invalid_argument);
    CHECK_THROWS_AS(attach_pendants(complete(3), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(attach_pendants(complete(3), 0, 30), std::invalid_argument);
    CHECK_THROWS_AS(join_with_complete(complete(30), 3), std::invalid_argument);
    CHECK_THROWS_AS(join_with_complete(complete(3), -1), std::invalid_argument);
}

TEST_CASE("degree profiles") {
    CHECK(u3(5).degree_sequence() == std::vector<int>{4, 2, 2, 1, 1});
    CHECK(b33(4).degree_sequence() == std::vector<int>{3, 3, 2, 2});
    CHECK(b33(4).edge_count() == 5);
    CHECK(b33(7).degree_sequence() == std::vector<int>{6, 3, 2, 2, 1, 1, 1});
    CHECK(k4_pendant(6).degree_sequence() == std::vector<int>{5, 3, 3, 3, 1, 1});
    CHECK(book3_pendant(7).degree_sequence() == std::vector<int>{6, 4, 2, 2, 2, 1, 1});
}

TEST_CASE("closed forms for the family indices") {
    for (int n = 3; n <= 9; ++n) {
        CHECK(m1(u3(n)) == static_cast<std::int64_t>(n - 1) * (n - 1) + n + 5);
        CHECK(m2(u3(n)) == static_cast<std::int64_t>(n) * n + 3);
    }
    for (int n = 4; n <= 9; ++n) {
        CHECK(m1(b33(n)) == static_cast<std::int64_t>(n - 1) * (n - 1) + n + 13);
        CHECK(m2(b33(n)) == static_cast<std::int64_t>(n) * n + 2 * n + 9);
    }
    for (int n = 4; n <= 9; ++n) {
        CHECK(m1(k4_pendant(n)) == static_cast<std::int64_t>(n - 1) * (n - 1) + n + 23);
        CHECK(m2(k4_pendant(n)) == static_cast<std::int64_t>(n) * n + 4 * n + 22);
    }
    for (int n = 5; n <= 9; ++n)
        CHECK(m2(book3_pendant(n)) == static_cast<std::int64_t>(n) * n + 4 * n + 19);

    CHECK(index_pair(u3(5)) == IndexPair{26, 28});
    CHECK(index_pair(b33(5)) == IndexPair{34, 44});
    CHECK(index_pair(k4_pendant(5)) == IndexPair{44, 67});
    CHECK(index_pair(book3_pendant(5)) == IndexPair{44, 64});
}

TEST_CASE("the tricyclic m1 tie") {
    for (int n = 5; n <= 12; ++n) {
        CHECK(m1(k4_pendant(n)) == m1(book3_pendant(n)));
        CHECK(m2(k4_pendant(n)) > m2(book3_pendant(n)));
    }
}

TEST_CASE("families are connected with the right cyclomatic number") {
    for (int n = 1; n <= 12; ++n) CHECK(star(n).cyclomatic_number() == 0);
    for (int n = 3; n <= 12; ++n) CHECK(u3(n).cyclomatic_number() == 1);
    for (int n = 4; n <= 12; ++n) CHECK(b33(n).cyclomatic_number() == 2);
    for (int n = 4; n <= 12; ++n) CHECK(k4_pendant(n).cyclomatic_number() == 3);
    for (int n = 5; n <= 12; ++n) CHECK(book3_pendant(n).cyclomatic_number() == 3);
}

TEST_CASE("attach_pendants identities") {
    CHECK(attach_pendants(cycle(3), 0, 4) == u3(7));
    const Graph g = b33(6);
    CHECK(attach_pendants(g, 2, 0) == g);
    CHECK(attach_pendants(complete(1), 0, 5) == star(6));
}

TEST_CASE("join_with_complete") {
    const Graph g = u3(5);
    CHECK(join_with_complete(g, 0) == g);
    const Graph j = join_with_complete(star(4), 1);
    CHECK(j.degree_sequence() == std::vector<int>{4, 4, 2, 2, 2});
    CHECK(m1(j) == 44);
    CHECK(index_pair(join_with_complete(star(3), 2)) == IndexPair{66, 120});
}

TEST_CASE("deleting the join vertices recovers the base graph") {
    std::mt19937 rng(2468);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int p = 1 + static_cast<int>(rng() % 3);
        const Graph g = oracles::random_graph(rng, n);
        const Graph j = join_with_complete(g, p);
        VertexSet added;
        for (int v = n; v < n + p; ++v) added.add(v);
        CHECK(j.delete_vertices(added) == g);
    }
}
