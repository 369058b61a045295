#include <doctest.h>

#include <sstream>

#include "ltf/hypergraph.hpp"
#include "oracles.hpp"

using namespace ltf;

TEST_CASE("build canonicalizes edge order and vertex order") {
    const auto g = Hypergraph::build(5, 3, {{4, 2, 0}, {1, 0, 2}, {3, 2, 1}});
    REQUIRE(g.num_edges() == 3);
    CHECK(std::vector<Vertex>(g.edge(0).begin(), g.edge(0).end()) == std::vector<Vertex>{0, 1, 2});
    CHECK(std::vector<Vertex>(g.edge(1).begin(), g.edge(1).end()) == std::vector<Vertex>{0, 2, 4});
    CHECK(std::vector<Vertex>(g.edge(2).begin(), g.edge(2).end()) == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("build rejects malformed edges") {
    CHECK_THROWS_AS(Hypergraph::build(5, 3, {{0, 1}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::build(5, 3, {{0, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::build(5, 3, {{0, 1, 5}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::build(5, 3, {{0, 1, 2}, {2, 1, 0}}), InvalidInput);
    CHECK_THROWS_AS(Hypergraph::build(2, 3, {{0, 1, 2}}), InvalidInput);
    CHECK_NOTHROW(Hypergraph::build(2, 3, {}));
}

TEST_CASE("empty hypergraph") {
    const auto g = Hypergraph::build(4, 3, {});
    CHECK(g.empty());
    CHECK(g.num_edges() == 0);
    CHECK(g.max_degree() == 0);
    CHECK(is_linear(g));
}

TEST_CASE("degrees, incidence and pair index on K_5^3") {
    const auto g = complete_hypergraph(5, 3);
    CHECK(g.num_edges() == 10);
    CHECK(g.max_degree() == 6);
    for (Vertex v = 0; v < 5; ++v) CHECK(g.degree(v) == 6);
    CHECK(g.pair_edges(0, 1).size() == 3);
    CHECK(g.pair_edges(1, 0).size() == 3);
    CHECK(g.pair_edges(2, 2).empty());
    const std::vector<Vertex> pair{0, 1}, triple{0, 1, 2};
    CHECK(g.codegree(pair) == 3);
    CHECK(g.codegree(triple) == 1);
    CHECK(g.indexed_pairs() == 10);
    CHECK_THROWS_AS(g.degree(5), InvalidInput);
    CHECK_FALSE(is_linear(g));
}

TEST_CASE("subgraph keeps ids in order and rejects unsorted ids") {
    const auto g = complete_hypergraph(5, 3);
    const std::vector<EdgeId> keep{1, 4, 7};
    const auto h = g.subgraph(keep);
    REQUIRE(h.num_edges() == 3);
    for (std::size_t i = 0; i < keep.size(); ++i)
        CHECK(std::equal(h.edge(static_cast<EdgeId>(i)).begin(), h.edge(static_cast<EdgeId>(i)).end(),
                         g.edge(keep[i]).begin()));
    const std::vector<EdgeId> bad{4, 1};
    CHECK_THROWS_AS(g.subgraph(bad), InvalidInput);
    const std::vector<EdgeId> out_of_range{10};
    CHECK_THROWS_AS(g.subgraph(out_of_range), InvalidInput);
}

TEST_CASE("disjoint union shifts the second graph") {
    const auto a = complete_hypergraph(4, 3);
    const auto b = complete_hypergraph(3, 3);
    const auto u = disjoint_union(a, b);
    CHECK(u.num_vertices() == 7);
    CHECK(u.num_edges() == 5);
    CHECK(std::vector<Vertex>(u.edge(4).begin(), u.edge(4).end()) == std::vector<Vertex>{4, 5, 6});
    CHECK_THROWS_AS(disjoint_union(a, complete_hypergraph(4, 2)), InvalidInput);
}

TEST_CASE("linear hypergraph detection") {
    CHECK(is_linear(Hypergraph::build(7, 3, {{0, 1, 2}, {0, 3, 4}, {2, 4, 5}})));
    CHECK_FALSE(is_linear(Hypergraph::build(5, 3, {{0, 1, 2}, {0, 1, 3}})));
}

TEST_CASE("text format round trip with comments") {
    const auto g = Hypergraph::build(6, 3, {{0, 1, 2}, {2, 3, 4}, {1, 4, 5}});
    std::ostringstream out;
    const std::vector<std::string> comments{" made by hand"};
    write_hypergraph(out, g, comments);
    std::istringstream in(out.str());
    const auto file = read_hypergraph(in);
    CHECK(file.graph == g);
    REQUIRE(file.comments.size() == 1);
    CHECK(file.comments[0] == " made by hand");
    CHECK(to_text(g) == "6 3 3\n0 1 2\n1 4 5\n2 3 4\n");
}

TEST_CASE("reader is strict") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_hypergraph(in);
    };
    CHECK_NOTHROW(parse("4 3 1\n0 1 2\n"));
    CHECK_THROWS_AS(parse(""), InvalidInput);
    CHECK_THROWS_AS(parse("4 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 1\n0 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 1\n0 2 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 2\n0 1 3\n0 1 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 2\n0 1 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 1\n0 1 2\n0 1 3\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 1\n0 1 x\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 1\n0 1 4\n"), InvalidInput);
    CHECK_THROWS_AS(parse("4 3 1\n-1 1 2\n"), InvalidInput);
    CHECK_THROWS_AS(read_hypergraph_file("/nonexistent/host.txt"), InvalidInput);
}

TEST_CASE("digest is stable and content-sensitive") {
    const auto a = complete_hypergraph(6, 3);
    CHECK(digest(a) == digest(complete_hypergraph(6, 3)));
    CHECK(digest(a).size() == 16);
    CHECK(digest(a) != digest(complete_hypergraph(7, 3)));
}

TEST_CASE("property: indexes agree with a rebuild and degrees sum to r*m") {
    Rng rng(11);
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = 4 + rng.below(9), r = 2 + rng.below(3);
        if (r > n) continue;
        const auto g = oracle::random_host(n, r, rng.below(40), rng);
        CHECK(g.indexes_consistent());
        std::size_t total = 0;
        for (Vertex v = 0; v < n; ++v) total += g.degree(v);
        CHECK(total == r * g.num_edges());
        std::istringstream in(to_text(g));
        CHECK(read_hypergraph(in).graph == g);
        // codegree of every pair equals a direct count.
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                std::size_t direct = 0;
                for (EdgeId e = 0; e < g.num_edges(); ++e)
                    direct += contains_vertex(g.edge(e), a) && contains_vertex(g.edge(e), b);
                CHECK(g.pair_edges(a, b).size() == direct);
            }
    }
}
