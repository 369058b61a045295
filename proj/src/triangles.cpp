#include "ltf/triangles.hpp"

#include <string>

namespace ltf {

TriangleList loose_triangles(const Hypergraph& g, std::uint64_t limit) {
    TriangleList out;
    const bool complete = for_each_loose_triangle(g, [&](const LooseTriangle& t) {
        if (out.triangles.size() >= limit) return false;
        out.triangles.push_back(t);
        return true;
    });
    out.truncated = !complete;
    return out;
}

std::vector<LooseTriangle> all_loose_triangles(const Hypergraph& g, std::uint64_t cap) {
    auto list = loose_triangles(g, cap);
    if (list.truncated)
        throw CapExceeded("more than " + std::to_string(cap) + " loose triangles in a host with " +
                          std::to_string(g.num_edges()) + " edges");
    return std::move(list.triangles);
}

std::uint64_t count_loose_triangles(const Hypergraph& g) {
    std::uint64_t count = 0;
    for_each_loose_triangle(g, [&](const LooseTriangle&) {
        ++count;
        return true;
    });
    return count;
}

TriangleCount count_loose_triangles(const Hypergraph& g, std::uint64_t cap) {
    TriangleCount out;
    out.truncated = !for_each_loose_triangle(g, [&](const LooseTriangle&) {
        if (out.count >= cap) return false;
        ++out.count;
        return true;
    });
    return out;
}

bool is_tfree(const Hypergraph& g) {
    return for_each_loose_triangle(g, [](const LooseTriangle&) { return false; });
}

bool is_loose_triangle(const Hypergraph& g, const LooseTriangle& t) {
    const auto m = g.num_edges();
    if (!(t.first < t.second && t.second < t.third && t.third < m)) return false;
    const auto a = g.edge(t.first), b = g.edge(t.second), c = g.edge(t.third);
    Vertex ab = 0, bc = 0, ac = 0;
    if (shared_vertices(a, b, ab) != 1 || shared_vertices(b, c, bc) != 1 ||
        shared_vertices(a, c, ac) != 1)
        return false;
    if (ab == bc || bc == ac || ab == ac) return false;  // common intersection nonempty
    return ab == t.link_12 && bc == t.link_23 && ac == t.link_13;
}

}  // namespace ltf
