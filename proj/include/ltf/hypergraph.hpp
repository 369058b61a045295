#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ltf/error.hpp"

namespace ltf {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Immutable r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are strictly increasing r-tuples stored in lexicographic order; an
/// edge's position in that order is its EdgeId everywhere in the library.
/// Vertex incidence lists and the pair index are built once at construction.
class Hypergraph {
  public:
    Hypergraph() = default;

    /// Canonicalizes and validates an edge list. Each inner vector is an
    /// r-set in any order. Throws InvalidInput on wrong arity, repeated
    /// vertex, out-of-range vertex, or duplicate edge.
    static Hypergraph build(std::size_t n, std::size_t r,
                            std::vector<std::vector<Vertex>> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t uniformity() const { return r_; }
    std::size_t num_edges() const { return r_ == 0 ? 0 : flat_.size() / r_; }
    bool empty() const { return flat_.empty(); }

    std::span<const Vertex> edge(EdgeId e) const {
        return {flat_.data() + static_cast<std::size_t>(e) * r_, r_};
    }
    const std::vector<Vertex>& flat_edges() const { return flat_; }

    /// Edges containing v, ascending.
    std::span<const EdgeId> incident(Vertex v) const {
        return {incidence_.data() + inc_offset_[v], inc_offset_[v + 1] - inc_offset_[v]};
    }

    /// Edges containing both a and b, ascending. Empty if a == b is not a valid pair.
    std::span<const EdgeId> pair_edges(Vertex a, Vertex b) const;

    /// Number of distinct vertex pairs covered by at least one edge.
    std::size_t indexed_pairs() const { return pair_keys_.size(); }

    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;
    /// Number of edges containing every vertex of `vertices`.
    std::size_t codegree(std::span<const Vertex> vertices) const;

    /// The sub-hypergraph on the same vertex set keeping the listed edges.
    /// Ids must be strictly increasing; the result's ids follow that order.
    Hypergraph subgraph(std::span<const EdgeId> keep) const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.n_ == b.n_ && a.r_ == b.r_ && a.flat_ == b.flat_;
    }

    /// Rebuilds both indexes from the edge list and compares them to the stored ones.
    bool indexes_consistent() const;

  private:
    static Hypergraph from_canonical(std::size_t n, std::size_t r, std::vector<Vertex> flat);
    void build_indexes();

    std::size_t n_ = 0;
    std::size_t r_ = 2;
    std::vector<Vertex> flat_;
    std::vector<std::size_t> inc_offset_{0};
    std::vector<EdgeId> incidence_;
    // pair index: sorted unique pair keys, CSR offsets into pair_edges_.
    std::vector<std::uint64_t> pair_keys_;
    std::vector<std::size_t> pair_offset_{0};
    std::vector<EdgeId> pair_edges_;
};

/// Number of vertices shared by two sorted edges; `common` receives the last one found.
inline std::size_t shared_vertices(std::span<const Vertex> a, std::span<const Vertex> b,
                                   Vertex& common) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            common = *i;
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

inline bool contains_vertex(std::span<const Vertex> edge, Vertex v) {
    return std::binary_search(edge.begin(), edge.end(), v);
}

bool is_linear(const Hypergraph& g);

/// Vertex-relabelled union: g1 keeps its labels, g2 is shifted by g1.num_vertices().
Hypergraph disjoint_union(const Hypergraph& g1, const Hypergraph& g2);

/// K_n^r.
Hypergraph complete_hypergraph(std::size_t n, std::size_t r);

// ---- text format -------------------------------------------------------------
//
//   # optional comment lines
//   n r m
//   v_1 ... v_r        (m lines, strictly increasing, lexicographic order)

struct HypergraphFile {
    Hypergraph graph;
    std::vector<std::string> comments;  // without the leading '#'
};

HypergraphFile read_hypergraph(std::istream& in);
HypergraphFile read_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& g,
                      std::span<const std::string> comments = {});
std::string to_text(const Hypergraph& g);

/// FNV-1a 64 of the canonical text form, as 16 hex digits.
std::string digest(const Hypergraph& g);

}  // namespace ltf
