#include <doctest.h>

#include <set>
#include <tuple>

#include "ltf/hosts.hpp"
#include "ltf/triangles.hpp"
#include "oracles.hpp"

using namespace ltf;

TEST_CASE("triangle counts on complete hypergraphs") {
    CHECK(count_loose_triangles(complete_hypergraph(5, 3)) == 0);
    CHECK(count_loose_triangles(complete_hypergraph(6, 3)) == 120);
    CHECK(is_tfree(complete_hypergraph(5, 3)));
    CHECK_FALSE(is_tfree(complete_hypergraph(6, 3)));
}

TEST_CASE("a single loose triangle") {
    const auto g = Hypergraph::build(6, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
    const auto all = all_loose_triangles(g);
    REQUIRE(all.size() == 1);
    CHECK(all[0].first == 0);
    CHECK(all[0].second == 1);
    CHECK(all[0].third == 2);
    CHECK(is_loose_triangle(g, all[0]));
}

TEST_CASE("three edges through one vertex are not a loose triangle") {
    const auto g = Hypergraph::build(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    CHECK(count_loose_triangles(g) == 0);
}

TEST_CASE("cap handling") {
    const auto g = complete_hypergraph(6, 3);
    const auto capped = count_loose_triangles(g, 50);
    CHECK(capped.truncated);
    CHECK(capped.count == 50);
    const auto full = count_loose_triangles(g, 120);
    CHECK_FALSE(full.truncated);
    CHECK(full.count == 120);
    CHECK_THROWS_AS(all_loose_triangles(g, 119), CapExceeded);
    const auto list = loose_triangles(g, 10);
    CHECK(list.truncated);
    CHECK(list.triangles.size() == 10);
}

TEST_CASE("property: enumerator agrees with the naive triple loop") {
    Rng rng(2024);
    for (int round = 0; round < 100; ++round) {
        const std::size_t r = 3 + rng.below(2);
        const std::size_t n = r + 1 + rng.below(10 - r);
        const auto g = oracle::random_host(n, r, rng.below(31), rng);
        const auto triangles = all_loose_triangles(g);
        REQUIRE(triangles.size() == oracle::triangle_count(g));
        for (const auto& t : triangles) {
            CHECK(t.first < t.second);
            CHECK(t.second < t.third);
            CHECK(oracle::is_triangle(g.edge(t.first), g.edge(t.second), g.edge(t.third)));
            CHECK(is_loose_triangle(g, t));
        }
        std::set<std::tuple<EdgeId, EdgeId, EdgeId>> distinct;
        for (const auto& t : triangles) distinct.emplace(t.first, t.second, t.third);
        CHECK(distinct.size() == triangles.size());
    }
}

TEST_CASE("disjoint cliques double the triangle count") {
    CHECK(count_loose_triangles(disjoint_cliques(2, 6, 3)) == 240);
}
