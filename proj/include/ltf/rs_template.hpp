#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ltf/apfree.hpp"
#include "ltf/hypergraph.hpp"

namespace ltf {

/// Edge-count ceiling up to which templates are certified linear and
/// loose-triangle-free by the hypergraph oracles.
inline constexpr std::size_t kDefaultVerifyCap = 100'000;

/// r-partite hypergraph H(A, Z_t): part i holds vertices [i*t, (i+1)*t) and
/// every gamma in Z_t, a in A gives the edge {i*t + (gamma + i*a) mod t}.
struct Template {
    Hypergraph graph;
    std::size_t r = 0;
    std::int64_t t = 0;
    ApFreeSet differences;  // cyclic in Z_t
    bool verified = false;  // oracle-certified linear and T-free

    std::size_t num_vertices() const { return graph.num_vertices(); }
    std::size_t part_of(Vertex v) const { return v / static_cast<Vertex>(t); }
};

bool is_prime(std::int64_t n);
std::int64_t next_prime(std::int64_t n);

/// Builds H(A, Z_t). Requires t prime, t > r - 1 and A verified in Z_t.
/// Certifies with the oracles when e = |A| t <= verify_cap; throws
/// InvalidInput if a certification fails.
Template rs_template(const ApFreeSet& differences, std::int64_t t, std::size_t r,
                     std::size_t verify_cap = kDefaultVerifyCap);

/// t = smallest prime >= max(t_target, r); A = best_template_differences
/// below floor((t-1) / max(3, r-1)) embedded in Z_t. For r = 3 that is the
/// best 3-AP-free set below floor((t-1)/3).
Template template_for(std::int64_t t_target, std::size_t r,
                      std::size_t verify_cap = kDefaultVerifyCap);

/// Hypergraph text format preceded by "# template r=<r> t=<t> A=<a,b,...>".
void write_template(std::ostream& out, const Template& tpl);
/// Reads a template file, rebuilds H(A, Z_t) from its header and checks the
/// listed edges agree.
Template read_template(std::istream& in, std::size_t verify_cap = kDefaultVerifyCap);
Template read_template_file(const std::string& path, std::size_t verify_cap = kDefaultVerifyCap);

}  // namespace ltf
