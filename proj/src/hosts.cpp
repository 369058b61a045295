#include "ltf/hosts.hpp"

#include <numeric>
#include <unordered_map>

#include "ltf/random.hpp"

namespace ltf {

namespace {

// Visits every r-subset of [n] in lexicographic order.
template <class Visit>
void for_each_combination(std::size_t n, std::size_t r, Visit&& visit) {
    if (r == 0 || r > n) return;
    std::vector<Vertex> combo(r);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
        visit(std::as_const(combo));
        std::size_t i = r;
        while (i > 0 && combo[i - 1] == n - r + i - 1) --i;
        if (i == 0) return;
        ++combo[i - 1];
        for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
    }
}

void require_uniformity(std::size_t n, std::size_t r) {
    if (r < 2) throw InvalidInput("uniformity must be at least 2");
    if (r > n) throw InvalidInput("uniformity " + std::to_string(r) + " exceeds n = " + std::to_string(n));
}

}  // namespace

Hypergraph gnp(std::size_t n, std::size_t r, double p, std::uint64_t seed) {
    require_uniformity(n, r);
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
    Rng rng(derive_seed(seed, 0));
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(n, r, [&](const std::vector<Vertex>& c) {
        if (rng.bernoulli(p)) edges.push_back(c);
    });
    return Hypergraph::build(n, r, std::move(edges));
}

Hypergraph disjoint_cliques(std::size_t copies, std::size_t t, std::size_t r) {
    if (t < r) throw InvalidInput("clique size t = " + std::to_string(t) + " is below r = " + std::to_string(r));
    require_uniformity(t, r);
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t c = 0; c < copies; ++c) {
        const auto shift = static_cast<Vertex>(c * t);
        for_each_combination(t, r, [&](const std::vector<Vertex>& combo) {
            auto& e = edges.emplace_back(combo);
            for (auto& v : e) v += shift;
        });
    }
    return Hypergraph::build(copies * t, r, std::move(edges));
}

Hypergraph star(std::size_t n, std::size_t r) {
    require_uniformity(n, r);
    std::vector<std::vector<Vertex>> edges;
    for_each_combination(n - 1, r - 1, [&](const std::vector<Vertex>& rest) {
        auto& e = edges.emplace_back(1, 0);
        for (Vertex v : rest) e.push_back(v + 1);
    });
    return Hypergraph::build(n, r, std::move(edges));
}

Hypergraph partial_steiner(std::size_t n, std::size_t r, std::uint64_t seed) {
    if (r < 4) throw InvalidInput("partial Steiner hosts need r >= 4");
    require_uniformity(n, r);
    std::vector<std::vector<Vertex>> candidates;
    for_each_combination(n, r, [&](const std::vector<Vertex>& c) { candidates.push_back(c); });
    Rng rng(derive_seed(seed, 0));
    rng.shuffle(candidates.begin(), candidates.end());

    std::vector<bool> covered(n * n * n, false);
    auto key = [n](Vertex a, Vertex b, Vertex c) { return (static_cast<std::size_t>(a) * n + b) * n + c; };
    std::vector<std::vector<Vertex>> edges;
    for (auto& e : candidates) {
        bool free = true;
        for (std::size_t a = 0; a < r && free; ++a)
            for (std::size_t b = a + 1; b < r && free; ++b)
                for (std::size_t c = b + 1; c < r && free; ++c)
                    if (covered[key(e[a], e[b], e[c])]) free = false;
        if (!free) continue;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                for (std::size_t c = b + 1; c < r; ++c) covered[key(e[a], e[b], e[c])] = true;
        edges.push_back(std::move(e));
    }
    return Hypergraph::build(n, r, std::move(edges));
}

std::size_t max_triple_coverage(const Hypergraph& g) {
    const std::size_t r = g.uniformity();
    if (r < 3) return 0;
    const std::uint64_t n = g.num_vertices();
    std::unordered_map<std::uint64_t, std::size_t> coverage;
    std::size_t best = 0;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        auto e = g.edge(id);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b)
                for (std::size_t c = b + 1; c < r; ++c)
                    best = std::max(best, ++coverage[(e[a] * n + e[b]) * n + e[c]]);
    }
    return best;
}

HostSpec::Kind parse_host_kind(const std::string& name) {
    using K = HostSpec::Kind;
    if (name == "gnp") return K::gnp;
    if (name == "cliques") return K::cliques;
    if (name == "star") return K::star;
    if (name == "complete") return K::complete;
    if (name == "steiner") return K::steiner;
    if (name == "file") return K::file;
    throw InvalidInput("unknown host kind '" + name + "' (expected gnp, cliques, star, complete, steiner, file)");
}

std::string to_string(HostSpec::Kind kind) {
    using K = HostSpec::Kind;
    switch (kind) {
        case K::gnp: return "gnp";
        case K::cliques: return "cliques";
        case K::star: return "star";
        case K::complete: return "complete";
        case K::steiner: return "steiner";
        case K::file: return "file";
    }
    return "unknown";
}

Hypergraph make_host(const HostSpec& spec) {
    using K = HostSpec::Kind;
    switch (spec.kind) {
        case K::gnp: return gnp(spec.n, spec.r, spec.p, spec.seed);
        case K::cliques: return disjoint_cliques(spec.copies, spec.t, spec.r);
        case K::star: return star(spec.n, spec.r);
        case K::complete:
            require_uniformity(spec.n, spec.r);
            return complete_hypergraph(spec.n, spec.r);
        case K::steiner: return partial_steiner(spec.n, spec.r, spec.seed);
        case K::file: return read_hypergraph_file(spec.path).graph;
    }
    throw InvalidInput("unknown host kind");
}

}  // namespace ltf
