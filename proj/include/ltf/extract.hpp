#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltf/hypergraph.hpp"
#include "ltf/random.hpp"
#include "ltf/rs_template.hpp"
#include "ltf/triangles.hpp"

namespace ltf {

enum class Algorithm { random_hom, deletion, star, pure_deletion, exact };
std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

struct ExtractionParams {
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::int64_t template_t = 0;  // modulus of the template, 0 if none
    std::string template_digest;
    std::uint64_t budget = 0;  // exact search node budget
};

/// A loose-triangle-free subgraph of a host, given by canonical edge ids.
struct ExtractionResult {
    std::string host_digest;
    Algorithm algorithm = Algorithm::star;
    ExtractionParams params;
    std::vector<EdgeId> kept_edges;  // strictly increasing
    bool certified = false;          // oracle re-check found no loose triangle
    std::size_t value = 0;           // kept_edges.size()

    // Per-trial values; best = max, plus their mean and sample deviation.
    std::vector<std::size_t> trial_values;
    double trial_mean = 0.0;
    double trial_sd = 0.0;

    // Exact search only.
    bool optimal = false;
    std::size_t upper_bound = 0;
    std::uint64_t nodes = 0;
};

struct TrialOptions {
    std::size_t trials = 32;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t triangle_cap = kDefaultTriangleCap;
};

/// Oracle check: the listed edges of g span no loose triangle.
bool certify(const Hypergraph& g, const std::vector<EdgeId>& kept);

/// ceil(r (r * max_degree)^(1/(r-1))), computed exactly in integers.
std::int64_t default_t(std::size_t r, std::size_t max_degree);

/// round(p^(2/(2r-3)) n^(1/2)), at least 1: the template size used with deletion.
std::int64_t deletion_default_t(std::size_t n, std::size_t r, double p);

/// A uniformly random map from host vertices to template vertices.
std::vector<Vertex> random_coloring(std::size_t host_vertices, std::size_t template_vertices, Rng& rng);

/// Condition (1): the images of e are r distinct template vertices forming a template edge.
bool maps_to_template_edge(std::span<const Vertex> e, const std::vector<Vertex>& coloring, const Template& tpl);

/// One random-homomorphism trial: keeps e iff e maps onto a template edge and
/// no host edge meeting e in exactly one vertex maps inside the image of e.
std::vector<EdgeId> random_hom_trial(const Hypergraph& g, const Template& tpl,
                                     const std::vector<Vertex>& coloring);

/// Best of `trials` random-homomorphism trials; trial i draws its coloring
/// from derive_seed(seed, i). Ties go to the lexicographically smaller set.
ExtractionResult random_hom_extract(const Hypergraph& g, const Template& tpl, const TrialOptions& opts);

/// Removes, until no loose triangle remains, the edge lying in the most
/// remaining triangles (lowest id on ties). Returns the surviving ids.
std::vector<EdgeId> greedy_triangle_deletion(const Hypergraph& g, std::uint64_t triangle_cap = kDefaultTriangleCap);

/// With a template: per trial keep edges mapped onto template edges, then
/// delete greedily. Without: greedy deletion on the host itself (one trial).
ExtractionResult deletion_extract(const Hypergraph& g, const Template* tpl, const TrialOptions& opts);

/// All edges through the lowest-numbered vertex of maximum degree.
ExtractionResult star_extract(const Hypergraph& g);

/// 3-graph on the host's edge ids whose edges are the host's loose triangles.
Hypergraph conflict_hypergraph(const Hypergraph& g, std::uint64_t triangle_cap = kDefaultTriangleCap);

inline constexpr std::uint64_t kDefaultExactBudget = 10'000'000;

/// Branch and bound for the minimum set of edges meeting every loose
/// triangle. Returns the best subgraph found; `optimal` is false when the
/// node budget ran out, with `upper_bound` the best proven bound.
ExtractionResult exact_search(const Hypergraph& g, std::uint64_t budget = kDefaultExactBudget,
                              std::uint64_t triangle_cap = kDefaultTriangleCap);

class BudgetExhausted : public CapExceeded {
  public:
    BudgetExhausted(const std::string& msg, ExtractionResult best)
        : CapExceeded(msg), best_(std::move(best)) {}
    const ExtractionResult& best() const { return best_; }

  private:
    ExtractionResult best_;
};

/// exact_search that throws BudgetExhausted (carrying the bound pair) unless optimal.
ExtractionResult exact_max_tfree(const Hypergraph& g, std::uint64_t budget = kDefaultExactBudget,
                                 std::uint64_t triangle_cap = kDefaultTriangleCap);

}  // namespace ltf
