#pragma once

#include <cstdint>
#include <string>

#include "ltf/hypergraph.hpp"

namespace ltf {

/// G^r_{n,p}: each r-subset of [n], visited in lexicographic order, is kept
/// independently with probability p. One RNG stream per seed.
Hypergraph gnp(std::size_t n, std::size_t r, double p, std::uint64_t seed);

/// `copies` vertex-disjoint copies of K_t^r.
Hypergraph disjoint_cliques(std::size_t copies, std::size_t t, std::size_t r);

/// All r-sets containing vertex 0.
Hypergraph star(std::size_t n, std::size_t r);

/// Randomized greedy packing in which every 3-set of vertices lies in at most
/// one edge: candidate r-sets are visited in a seed-shuffled order and
/// accepted when none of their triples is already covered. Requires r >= 4.
Hypergraph partial_steiner(std::size_t n, std::size_t r, std::uint64_t seed);

/// Largest number of edges containing any single 3-set.
std::size_t max_triple_coverage(const Hypergraph& g);

struct HostSpec {
    enum class Kind { gnp, cliques, star, complete, steiner, file };
    Kind kind = Kind::complete;
    std::size_t n = 0;
    std::size_t r = 3;
    double p = 0.0;
    std::size_t t = 0;
    std::size_t copies = 1;
    std::uint64_t seed = 0;
    std::string path;
};

HostSpec::Kind parse_host_kind(const std::string& name);
std::string to_string(HostSpec::Kind kind);

/// Validates the parameters for the kind and builds the host.
Hypergraph make_host(const HostSpec& spec);

}  // namespace ltf
