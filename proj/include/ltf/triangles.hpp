#pragma once

#include <cstdint>
#include <vector>

#include "ltf/hypergraph.hpp"

namespace ltf {

/// Three edges pairwise meeting in exactly one vertex with empty common
/// intersection. Edge ids satisfy first < second < third; link_ab is the
/// vertex shared by edges a and b.
struct LooseTriangle {
    EdgeId first;
    EdgeId second;
    EdgeId third;
    Vertex link_12;
    Vertex link_23;
    Vertex link_13;

    friend bool operator==(const LooseTriangle&, const LooseTriangle&) = default;
};

inline constexpr std::uint64_t kDefaultTriangleCap = 100'000'000;

/// Calls visit(const LooseTriangle&) once per loose triangle; visit returns
/// false to stop. Returns false iff stopped early.
///
/// Pairs (e, f) with e < f meeting in exactly one vertex v are found through
/// the incidence list of v; the triangle is then closed through the link
/// vertices of e other than v. Every triangle is reached exactly once, from
/// its lowest edge and the vertex it shares with its middle edge.
template <class Visit>
bool for_each_loose_triangle(const Hypergraph& g, Visit&& visit) {
    const auto m = static_cast<EdgeId>(g.num_edges());
    for (EdgeId i = 0; i < m; ++i) {
        const auto e = g.edge(i);
        for (Vertex v : e) {
            const auto at_v = g.incident(v);
            for (auto jt = std::upper_bound(at_v.begin(), at_v.end(), i); jt != at_v.end(); ++jt) {
                const EdgeId j = *jt;
                const auto f = g.edge(j);
                Vertex common = 0;
                if (shared_vertices(e, f, common) != 1) continue;
                for (Vertex x : e) {
                    if (x == v) continue;
                    const auto at_x = g.incident(x);
                    for (auto kt = std::upper_bound(at_x.begin(), at_x.end(), j); kt != at_x.end(); ++kt) {
                        const auto h = g.edge(*kt);
                        Vertex with_e = 0, with_f = 0;
                        if (shared_vertices(h, e, with_e) != 1) continue;
                        if (shared_vertices(h, f, with_f) != 1) continue;
                        // h meets e only in x != v, so v is not in h and with_f != v.
                        if (!visit(LooseTriangle{i, j, *kt, v, with_f, x})) return false;
                    }
                }
            }
        }
    }
    return true;
}

struct TriangleList {
    std::vector<LooseTriangle> triangles;
    bool truncated = false;
};

/// Enumerates up to `limit` loose triangles; `truncated` is set when more exist.
TriangleList loose_triangles(const Hypergraph& g, std::uint64_t limit = kDefaultTriangleCap);

/// Same, but throws CapExceeded instead of truncating.
std::vector<LooseTriangle> all_loose_triangles(const Hypergraph& g,
                                               std::uint64_t cap = kDefaultTriangleCap);

std::uint64_t count_loose_triangles(const Hypergraph& g);

struct TriangleCount {
    std::uint64_t count = 0;
    bool truncated = false;  // count stopped at the cap
};
TriangleCount count_loose_triangles(const Hypergraph& g, std::uint64_t cap);

bool is_tfree(const Hypergraph& g);

/// Checks the defining intersection conditions of a triangle directly.
bool is_loose_triangle(const Hypergraph& g, const LooseTriangle& t);

}  // namespace ltf
