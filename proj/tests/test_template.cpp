#include <doctest.h>

#include <set>
#include <sstream>

#include "ltf/extract.hpp"
#include "ltf/rs_template.hpp"
#include "ltf/triangles.hpp"
#include "oracles.hpp"

using namespace ltf;

namespace {

void check_template(const Template& tpl) {
    const auto& g = tpl.graph;
    CHECK(g.num_vertices() == tpl.r * static_cast<std::size_t>(tpl.t));
    CHECK(g.num_edges() == tpl.differences.size() * static_cast<std::size_t>(tpl.t));
    CHECK(tpl.verified);
    CHECK(is_linear(g));
    CHECK(oracle::triangle_count(g) == 0);
    // One vertex per part, and each pair of parts determines the edge.
    for (std::size_t i = 0; i < tpl.r; ++i)
        for (std::size_t j = i + 1; j < tpl.r; ++j) {
            std::set<std::pair<Vertex, Vertex>> seen;
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                const auto edge = g.edge(e);
                for (std::size_t k = 0; k < tpl.r; ++k) CHECK(tpl.part_of(edge[k]) == k);
                CHECK(seen.emplace(edge[i], edge[j]).second);
            }
        }
}

}  // namespace

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(next_prime(100) == 101);
    CHECK(next_prime(5) == 5);
}

TEST_CASE("H({1,2}, Z_5) for r = 3") {
    const auto tpl = rs_template(make_apfree({1, 2}, Ambient::cyclic(5)), 5, 3);
    CHECK(tpl.num_vertices() == 15);
    CHECK(tpl.graph.num_edges() == 10);
    check_template(tpl);
}

TEST_CASE("empty difference set") {
    const auto tpl = rs_template(make_apfree({}, Ambient::cyclic(7)), 7, 3);
    CHECK(tpl.num_vertices() == 21);
    CHECK(tpl.graph.num_edges() == 0);
}

TEST_CASE("rs_template preconditions") {
    CHECK_THROWS_AS(rs_template(make_apfree({1}, Ambient::cyclic(4)), 4, 3), InvalidInput);
    CHECK_THROWS_AS(rs_template(make_apfree({1}, Ambient::cyclic(3)), 3, 5), InvalidInput);
    CHECK_THROWS_AS(rs_template(make_apfree({0, 1, 2}, Ambient::cyclic(7)), 7, 3), InvalidInput);
    CHECK_THROWS_AS(rs_template(make_apfree({1, 2}, Ambient::cyclic(7)), 5, 3), InvalidInput);
}

TEST_CASE("a 3-AP-free set that admits a 4-partite triangle is rejected") {
    const auto a = embed_cyclic(best_apfree(4), 13);
    REQUIRE(a.verified);
    CHECK_THROWS_WITH_AS(rs_template(a, 13, 4), doctest::Contains("rejected"), InvalidInput);
}

TEST_CASE("template_for examples") {
    const auto five = template_for(5, 3);
    CHECK(five.t == 5);
    CHECK(five.differences.size() == 1);
    CHECK(five.graph.num_edges() == 5);
    check_template(five);

    const auto big = template_for(100, 3);
    CHECK(big.t == 101);
    CHECK(big.verified);
    CHECK(is_tfree(big.graph));

    const auto r5 = template_for(2, 5);
    CHECK(r5.t == 5);
    check_template(r5);
}

TEST_CASE("templates for small moduli are certified for r = 3, 4, 5") {
    for (std::size_t r : {3u, 4u, 5u})
        for (std::int64_t t : {5, 7, 11, 13, 17, 23}) check_template(template_for(t, r));
}

TEST_CASE("verify cap leaves large templates unverified") {
    const auto tpl = template_for(101, 3, 10);
    CHECK_FALSE(tpl.verified);
    CHECK(tpl.graph.num_edges() > 10);
}

TEST_CASE("template file round trip") {
    const auto tpl = template_for(11, 3);
    std::ostringstream out;
    write_template(out, tpl);
    CHECK(out.str().rfind("# template r=3 t=11 A=", 0) == 0);
    std::istringstream in(out.str());
    const auto back = read_template(in);
    CHECK(back.graph == tpl.graph);
    CHECK(back.differences.elements == tpl.differences.elements);
    CHECK(back.verified);

    std::istringstream missing("3 3 0\n");
    CHECK_THROWS_AS(read_template(missing), InvalidInput);
    auto tampered = out.str();
    tampered.replace(tampered.find("A=") + 2, 1, "5");
    std::istringstream bad(tampered);
    CHECK_THROWS_AS(read_template(bad), InvalidInput);
}

TEST_CASE("keep-probability calibration by Monte-Carlo") {
    // A uniform map of r host vertices into V(G_t) lands on a template edge
    // with probability e(G_t) r! / |V(G_t)|^r.
    const auto tpl = rs_template(make_apfree({1, 2}, Ambient::cyclic(5)), 5, 3);
    const double v = static_cast<double>(tpl.num_vertices());
    const double expected = 10.0 * 6.0 / (v * v * v);
    const auto host = Hypergraph::build(3, 3, {{0, 1, 2}});
    Rng rng(99);
    const int trials = 200000;
    int hits = 0;
    for (int i = 0; i < trials; ++i) {
        const auto coloring = random_coloring(3, tpl.num_vertices(), rng);
        hits += maps_to_template_edge(host.edge(0), coloring, tpl);
    }
    const double freq = static_cast<double>(hits) / trials;
    const double se = std::sqrt(expected * (1 - expected) / trials);
    CHECK(std::abs(freq - expected) <= 3 * se);
}
