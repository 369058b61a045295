#pragma once

// Slow, obviously-correct reference implementations used only by tests.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ltf/hypergraph.hpp"
#include "ltf/random.hpp"

namespace oracle {

using ltf::EdgeId;
using ltf::Hypergraph;
using ltf::Vertex;

inline std::vector<Vertex> meet(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::vector<Vertex> out;
    for (Vertex x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) out.push_back(x);
    return out;
}

inline bool is_triangle(std::span<const Vertex> a, std::span<const Vertex> b, std::span<const Vertex> c) {
    const auto ab = meet(a, b), bc = meet(b, c), ac = meet(a, c);
    if (ab.size() != 1 || bc.size() != 1 || ac.size() != 1) return false;
    return meet(ab, c).empty();
}

/// O(m^3) loop over all edge triples.
inline std::uint64_t triangle_count(const Hypergraph& g) {
    std::uint64_t count = 0;
    const auto m = static_cast<EdgeId>(g.num_edges());
    for (EdgeId i = 0; i < m; ++i)
        for (EdgeId j = i + 1; j < m; ++j)
            for (EdgeId k = j + 1; k < m; ++k)
                if (is_triangle(g.edge(i), g.edge(j), g.edge(k))) ++count;
    return count;
}

inline bool tfree(const Hypergraph& g, const std::vector<EdgeId>& kept) {
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = a + 1; b < kept.size(); ++b)
            for (std::size_t c = b + 1; c < kept.size(); ++c)
                if (is_triangle(g.edge(kept[a]), g.edge(kept[b]), g.edge(kept[c]))) return false;
    return true;
}

/// Largest triangle-free edge subset by include/exclude recursion. Including
/// an edge is allowed only if it closes no triangle with the chosen edges.
inline std::size_t max_tfree(const Hypergraph& g) {
    const std::size_t m = g.num_edges();
    std::vector<EdgeId> chosen;
    std::size_t best = 0;
    auto closes = [&](EdgeId e) {
        for (std::size_t a = 0; a < chosen.size(); ++a)
            for (std::size_t b = a + 1; b < chosen.size(); ++b)
                if (is_triangle(g.edge(chosen[a]), g.edge(chosen[b]), g.edge(e))) return true;
        return false;
    };
    auto rec = [&](auto&& self, EdgeId next) -> void {
        best = std::max(best, chosen.size());
        if (next == m || chosen.size() + (m - next) <= best) return;
        if (!closes(next)) {
            chosen.push_back(next);
            self(self, next + 1);
            chosen.pop_back();
        }
        self(self, next + 1);
    };
    rec(rec, 0);
    return best;
}

/// Number of m-subsets of the C(n,3) triples spanning no loose triangle.
inline std::uint64_t census(std::size_t n, std::size_t m) {
    const auto all = ltf::complete_hypergraph(n, 3);
    const std::size_t total = all.num_edges();
    std::uint64_t count = 0;
    std::vector<EdgeId> pick;
    auto rec = [&](auto&& self, EdgeId next) -> void {
        if (pick.size() == m) {
            if (tfree(all, pick)) ++count;
            return;
        }
        for (EdgeId e = next; e < total; ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

/// Distinct x, y, z in the set with x + z = 2y (mod t when cyclic).
inline bool has_3ap(const std::vector<std::int64_t>& s, std::int64_t modulus = 0) {
    std::set<std::int64_t> members(s.begin(), s.end());
    for (auto x : s)
        for (auto y : s) {
            if (x == y) continue;
            std::int64_t z = 2 * y - x;
            if (modulus > 0) z = ((z % modulus) + modulus) % modulus;
            if (z != x && z != y && members.count(z)) return true;
        }
    return false;
}

/// m distinct random r-sets of [n] (m is clipped to C(n, r)).
inline Hypergraph random_host(std::size_t n, std::size_t r, std::size_t m, ltf::Rng& rng) {
    std::set<std::vector<Vertex>> edges;
    const auto all = ltf::complete_hypergraph(n, r);
    m = std::min(m, all.num_edges());
    while (edges.size() < m) {
        const auto e = all.edge(static_cast<EdgeId>(rng.below(all.num_edges())));
        edges.insert(std::vector<Vertex>(e.begin(), e.end()));
    }
    return Hypergraph::build(n, r, {edges.begin(), edges.end()});
}

}  // namespace oracle
