#include "ltf/extract.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>

#include "ltf/parallel.hpp"

namespace ltf {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::random_hom: return "random_hom";
        case Algorithm::deletion: return "deletion";
        case Algorithm::star: return "star";
        case Algorithm::pure_deletion: return "pure_deletion";
        case Algorithm::exact: return "exact";
    }
    return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "random_hom") return Algorithm::random_hom;
    if (name == "deletion") return Algorithm::deletion;
    if (name == "star") return Algorithm::star;
    if (name == "pure_deletion") return Algorithm::pure_deletion;
    if (name == "exact") return Algorithm::exact;
    throw InvalidInput("unknown algorithm '" + name +
                       "' (expected random_hom, deletion, star, pure_deletion, exact)");
}

bool certify(const Hypergraph& g, const std::vector<EdgeId>& kept) {
    return is_tfree(g.subgraph(kept));
}

std::int64_t default_t(std::size_t r, std::size_t max_degree) {
    if (r < 2) throw InvalidInput("uniformity must be at least 2");
    if (max_degree < 1) throw InvalidInput("default_t needs max degree >= 1");
    // c >= r (r D)^(1/(r-1))  <=>  c^(r-1) >= D r^r.
    using wide = unsigned __int128;
    const wide cap = static_cast<wide>(1) << 120;
    auto power = [&](wide base, std::size_t exp) {
        wide v = 1;
        for (std::size_t i = 0; i < exp; ++i) {
            v *= base;
            if (v > cap) return cap;
        }
        return v;
    };
    const wide target = static_cast<wide>(max_degree) * power(r, r);
    const double guess = static_cast<double>(r) *
                         std::pow(static_cast<double>(r) * static_cast<double>(max_degree), 1.0 / static_cast<double>(r - 1));
    std::int64_t lo = 1, hi = static_cast<std::int64_t>(guess) + 2;
    while (power(static_cast<wide>(hi), r - 1) < target) hi *= 2;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (power(static_cast<wide>(mid), r - 1) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::int64_t deletion_default_t(std::size_t n, std::size_t r, double p) {
    if (r < 2) throw InvalidInput("uniformity must be at least 2");
    const double t = std::pow(p, 2.0 / (2.0 * static_cast<double>(r) - 3.0)) * std::sqrt(static_cast<double>(n));
    return std::max<std::int64_t>(1, std::llround(t));
}

std::vector<Vertex> random_coloring(std::size_t host_vertices, std::size_t template_vertices, Rng& rng) {
    std::vector<Vertex> coloring(host_vertices);
    for (auto& c : coloring) c = static_cast<Vertex>(rng.below(template_vertices));
    return coloring;
}

namespace {

// Sorted images of e; false if two vertices of e share an image.
bool image_of(std::span<const Vertex> e, const std::vector<Vertex>& coloring, std::vector<Vertex>& image) {
    image.clear();
    for (Vertex v : e) image.push_back(coloring[v]);
    std::sort(image.begin(), image.end());
    return std::adjacent_find(image.begin(), image.end()) == image.end();
}

bool is_template_edge(const Template& tpl, const std::vector<Vertex>& image) {
    for (EdgeId id : tpl.graph.pair_edges(image[0], image[1])) {
        auto te = tpl.graph.edge(id);
        if (std::equal(te.begin(), te.end(), image.begin())) return true;
    }
    return false;
}

void check_template(const Hypergraph& g, const Template& tpl) {
    if (tpl.r != g.uniformity())
        throw InvalidInput("template uniformity " + std::to_string(tpl.r) + " does not match host uniformity " +
                           std::to_string(g.uniformity()));
    if (!tpl.verified) throw InvalidInput("template is not oracle-certified (raise --verify-cap or shrink t)");
}

double mean_of(const std::vector<std::size_t>& xs) {
    if (xs.empty()) return 0.0;
    double s = 0;
    for (auto x : xs) s += static_cast<double>(x);
    return s / static_cast<double>(xs.size());
}

double sd_of(const std::vector<std::size_t>& xs) {
    if (xs.size() < 2) return 0.0;
    const double mu = mean_of(xs);
    double s = 0;
    for (auto x : xs) s += (static_cast<double>(x) - mu) * (static_cast<double>(x) - mu);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

// Picks the best trial (largest, then lexicographically smallest) and fills the statistics.
ExtractionResult reduce_trials(const Hypergraph& g, Algorithm algo, std::vector<std::vector<EdgeId>> trials,
                               ExtractionParams params) {
    ExtractionResult out;
    out.host_digest = digest(g);
    out.algorithm = algo;
    out.params = std::move(params);
    std::size_t best = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        out.trial_values.push_back(trials[i].size());
        if (i == 0) continue;
        if (trials[i].size() > trials[best].size() ||
            (trials[i].size() == trials[best].size() && trials[i] < trials[best]))
            best = i;
    }
    if (!trials.empty()) out.kept_edges = std::move(trials[best]);
    out.value = out.kept_edges.size();
    out.trial_mean = mean_of(out.trial_values);
    out.trial_sd = sd_of(out.trial_values);
    out.certified = certify(g, out.kept_edges);
    return out;
}

}  // namespace

bool maps_to_template_edge(std::span<const Vertex> e, const std::vector<Vertex>& coloring, const Template& tpl) {
    std::vector<Vertex> image;
    return image_of(e, coloring, image) && is_template_edge(tpl, image);
}

std::vector<EdgeId> random_hom_trial(const Hypergraph& g, const Template& tpl, const std::vector<Vertex>& coloring) {
    std::vector<EdgeId> kept;
    std::vector<Vertex> image;
    const auto m = static_cast<EdgeId>(g.num_edges());
    for (EdgeId id = 0; id < m; ++id) {
        const auto e = g.edge(id);
        if (!image_of(e, coloring, image) || !is_template_edge(tpl, image)) continue;
        bool blocked = false;
        for (Vertex v : e) {
            for (EdgeId other : g.incident(v)) {
                if (other == id) continue;
                const auto f = g.edge(other);
                Vertex common = 0;
                if (shared_vertices(e, f, common) != 1) continue;
                const bool inside = std::all_of(f.begin(), f.end(), [&](Vertex u) {
                    return std::binary_search(image.begin(), image.end(), coloring[u]);
                });
                if (inside) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) break;
        }
        if (!blocked) kept.push_back(id);
    }
    return kept;
}

ExtractionResult random_hom_extract(const Hypergraph& g, const Template& tpl, const TrialOptions& opts) {
    check_template(g, tpl);
    if (opts.trials < 1) throw InvalidInput("trials must be at least 1");
    std::vector<std::vector<EdgeId>> trials(opts.trials);
    parallel_for(opts.trials, opts.threads, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed, i));
        trials[i] = random_hom_trial(g, tpl, random_coloring(g.num_vertices(), tpl.num_vertices(), rng));
    });
    ExtractionParams params{opts.trials, opts.seed, tpl.t, digest(tpl.graph), 0};
    return reduce_trials(g, Algorithm::random_hom, std::move(trials), std::move(params));
}

std::vector<EdgeId> greedy_triangle_deletion(const Hypergraph& g, std::uint64_t triangle_cap) {
    const auto triangles = all_loose_triangles(g, triangle_cap);
    const std::size_t m = g.num_edges();
    std::vector<std::uint32_t> count(m, 0);
    for (const auto& t : triangles) {
        ++count[t.first];
        ++count[t.second];
        ++count[t.third];
    }
    // CSR lists of triangles per edge.
    std::vector<std::size_t> offset(m + 1, 0);
    for (EdgeId e = 0; e < m; ++e) offset[e + 1] = offset[e] + count[e];
    std::vector<std::uint32_t> members(offset[m]);
    {
        std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
        for (std::uint32_t i = 0; i < triangles.size(); ++i) {
            members[cursor[triangles[i].first]++] = i;
            members[cursor[triangles[i].second]++] = i;
            members[cursor[triangles[i].third]++] = i;
        }
    }
    std::vector<bool> alive(triangles.size(), true);
    std::vector<bool> deleted(m, false);
    // Max-heap on (count, -id): most triangles first, lowest id on ties. Stale entries are skipped.
    std::priority_queue<std::pair<std::uint32_t, std::int64_t>> heap;
    for (EdgeId e = 0; e < m; ++e)
        if (count[e] > 0) heap.emplace(count[e], -static_cast<std::int64_t>(e));
    while (!heap.empty()) {
        const auto [c, neg_id] = heap.top();
        heap.pop();
        const auto e = static_cast<EdgeId>(-neg_id);
        if (deleted[e] || c != count[e] || c == 0) continue;
        deleted[e] = true;
        for (std::size_t k = offset[e]; k < offset[e + 1]; ++k) {
            const auto ti = members[k];
            if (!alive[ti]) continue;
            alive[ti] = false;
            for (EdgeId other : {triangles[ti].first, triangles[ti].second, triangles[ti].third}) {
                if (other == e) continue;
                if (--count[other] > 0) heap.emplace(count[other], -static_cast<std::int64_t>(other));
            }
        }
        count[e] = 0;
    }
    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < m; ++e)
        if (!deleted[e]) kept.push_back(e);
    return kept;
}

ExtractionResult deletion_extract(const Hypergraph& g, const Template* tpl, const TrialOptions& opts) {
    if (tpl == nullptr) {
        ExtractionParams params{1, opts.seed, 0, "", 0};
        std::vector<std::vector<EdgeId>> trials{greedy_triangle_deletion(g, opts.triangle_cap)};
        return reduce_trials(g, Algorithm::pure_deletion, std::move(trials), std::move(params));
    }
    check_template(g, *tpl);
    if (opts.trials < 1) throw InvalidInput("trials must be at least 1");
    std::vector<std::vector<EdgeId>> trials(opts.trials);
    parallel_for(opts.trials, opts.threads, [&](std::size_t i) {
        Rng rng(derive_seed(opts.seed, i));
        const auto coloring = random_coloring(g.num_vertices(), tpl->num_vertices(), rng);
        std::vector<EdgeId> mapped;
        for (EdgeId id = 0; id < g.num_edges(); ++id)
            if (maps_to_template_edge(g.edge(id), coloring, *tpl)) mapped.push_back(id);
        const auto survivors = greedy_triangle_deletion(g.subgraph(mapped), opts.triangle_cap);
        auto& kept = trials[i];
        kept.reserve(survivors.size());
        for (EdgeId local : survivors) kept.push_back(mapped[local]);
    });
    ExtractionParams params{opts.trials, opts.seed, tpl->t, digest(tpl->graph), 0};
    return reduce_trials(g, Algorithm::deletion, std::move(trials), std::move(params));
}

ExtractionResult star_extract(const Hypergraph& g) {
    std::vector<EdgeId> kept;
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) > best_degree) {
            best_degree = g.degree(v);
            auto inc = g.incident(v);
            kept.assign(inc.begin(), inc.end());
        }
    }
    std::vector<std::vector<EdgeId>> trials{std::move(kept)};
    return reduce_trials(g, Algorithm::star, std::move(trials), ExtractionParams{});
}

Hypergraph conflict_hypergraph(const Hypergraph& g, std::uint64_t triangle_cap) {
    const auto triangles = all_loose_triangles(g, triangle_cap);
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(triangles.size());
    for (const auto& t : triangles) edges.push_back({t.first, t.second, t.third});
    return Hypergraph::build(g.num_edges(), 3, std::move(edges));
}

// ---- exact search --------------------------------------------------------------

namespace {

// Minimum hitting set of the loose triangles by branch and bound.
class HittingSetSearch {
  public:
    HittingSetSearch(std::size_t edges, std::vector<LooseTriangle> triangles, std::uint64_t budget)
        : m_(edges), triangles_(std::move(triangles)), budget_(budget), state_(edges, State::open),
          deleted_in_(triangles_.size(), 0), open_in_(triangles_.size(), 3), offset_(edges + 1, 0) {
        for (const auto& t : triangles_) {
            ++offset_[t.first + 1];
            ++offset_[t.second + 1];
            ++offset_[t.third + 1];
        }
        for (std::size_t e = 0; e < m_; ++e) offset_[e + 1] += offset_[e];
        members_.resize(offset_[m_]);
        std::vector<std::size_t> cursor(offset_.begin(), offset_.end() - 1);
        for (std::uint32_t i = 0; i < triangles_.size(); ++i)
            for (EdgeId e : edges_of(i)) members_[cursor[e]++] = i;
        packing_mark_.assign(m_, 0);
    }

    // Seeds the incumbent with a known feasible deletion set.
    void set_incumbent(const std::vector<bool>& deleted) {
        best_deleted_ = deleted;
        best_cost_ = static_cast<std::size_t>(std::count(deleted.begin(), deleted.end(), true));
    }

    bool run() {
        // Edges outside every triangle never need deletion.
        for (std::size_t e = 0; e < m_; ++e)
            if (offset_[e] == offset_[e + 1]) state_[e] = State::kept;
        // Root bound: the packing bound at the root is a valid global lower bound.
        root_bound_ = packing_bound();
        search();
        return !aborted_;
    }

    std::size_t best_cost() const { return best_cost_; }
    const std::vector<bool>& best_deleted() const { return best_deleted_; }
    std::size_t root_bound() const { return root_bound_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    enum class State : std::uint8_t { open, kept, deleted };

    std::array<EdgeId, 3> edges_of(std::size_t ti) const {
        return {triangles_[ti].first, triangles_[ti].second, triangles_[ti].third};
    }

    void assign(EdgeId e, State s) {
        state_[e] = s;
        for (std::size_t k = offset_[e]; k < offset_[e + 1]; ++k) {
            --open_in_[members_[k]];
            if (s == State::deleted) ++deleted_in_[members_[k]];
        }
    }

    void release(EdgeId e) {
        const State s = state_[e];
        state_[e] = State::open;
        for (std::size_t k = offset_[e]; k < offset_[e + 1]; ++k) {
            ++open_in_[members_[k]];
            if (s == State::deleted) --deleted_in_[members_[k]];
        }
    }

    // Uncovered triangles pairwise disjoint on open edges each need their own deletion.
    std::size_t packing_bound() {
        ++stamp_;
        std::size_t bound = 0;
        for (std::size_t ti = 0; ti < triangles_.size(); ++ti) {
            if (deleted_in_[ti] != 0) continue;
            bool disjoint = true;
            for (EdgeId e : edges_of(ti))
                if (state_[e] == State::open && packing_mark_[e] == stamp_) disjoint = false;
            if (!disjoint) continue;
            ++bound;
            for (EdgeId e : edges_of(ti))
                if (state_[e] == State::open) packing_mark_[e] = stamp_;
        }
        return bound;
    }

    std::size_t uncovered_count(EdgeId e) const {
        std::size_t c = 0;
        for (std::size_t k = offset_[e]; k < offset_[e + 1]; ++k)
            if (deleted_in_[members_[k]] == 0) ++c;
        return c;
    }

    void search() {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        // Uncovered triangle with the fewest open edges.
        std::size_t pick = triangles_.size();
        std::uint8_t fewest = 4;
        for (std::size_t ti = 0; ti < triangles_.size(); ++ti) {
            if (deleted_in_[ti] != 0) continue;
            if (open_in_[ti] < fewest) {
                fewest = open_in_[ti];
                pick = ti;
                if (fewest == 0) return;  // three kept edges form a triangle
            }
        }
        if (pick == triangles_.size()) {
            if (cost_ < best_cost_) {
                best_cost_ = cost_;
                for (std::size_t e = 0; e < m_; ++e) best_deleted_[e] = state_[e] == State::deleted;
            }
            return;
        }
        if (cost_ + packing_bound() >= best_cost_) return;

        std::array<EdgeId, 3> open{};
        std::size_t n_open = 0;
        for (EdgeId e : edges_of(pick))
            if (state_[e] == State::open) open[n_open++] = e;
        std::stable_sort(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(n_open),
                         [&](EdgeId a, EdgeId b) { return uncovered_count(a) > uncovered_count(b); });

        // Branch i deletes open[i] and keeps open[0..i).
        for (std::size_t i = 0; i < n_open; ++i) {
            assign(open[i], State::deleted);
            ++cost_;
            if (cost_ < best_cost_) search();
            --cost_;
            release(open[i]);
            assign(open[i], State::kept);
        }
        for (std::size_t i = 0; i < n_open; ++i) release(open[i]);
    }

    std::size_t m_;
    std::vector<LooseTriangle> triangles_;
    std::uint64_t budget_;
    std::vector<State> state_;
    std::vector<std::uint8_t> deleted_in_;
    std::vector<std::uint8_t> open_in_;
    std::vector<std::size_t> offset_;
    std::vector<std::uint32_t> members_;
    std::vector<std::uint64_t> packing_mark_;
    std::uint64_t stamp_ = 0;
    std::size_t cost_ = 0;
    std::size_t best_cost_ = SIZE_MAX;
    std::vector<bool> best_deleted_;
    std::size_t root_bound_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

ExtractionResult exact_search(const Hypergraph& g, std::uint64_t budget, std::uint64_t triangle_cap) {
    if (budget < 1) throw InvalidInput("node budget must be at least 1");
    const std::size_t m = g.num_edges();
    auto triangles = all_loose_triangles(g, triangle_cap);

    const auto greedy = greedy_triangle_deletion(g, triangle_cap);
    std::vector<bool> deleted(m, true);
    for (EdgeId e : greedy) deleted[e] = false;

    HittingSetSearch search(m, std::move(triangles), budget);
    search.set_incumbent(deleted);
    const bool complete = search.run();

    std::vector<EdgeId> kept;
    for (EdgeId e = 0; e < m; ++e)
        if (!search.best_deleted()[e]) kept.push_back(e);

    ExtractionResult out;
    out.host_digest = digest(g);
    out.algorithm = Algorithm::exact;
    out.params.budget = budget;
    out.kept_edges = std::move(kept);
    out.value = out.kept_edges.size();
    out.trial_values = {out.value};
    out.trial_mean = static_cast<double>(out.value);
    out.certified = certify(g, out.kept_edges);
    out.optimal = complete;
    out.upper_bound = complete ? out.value : m - std::min(m, search.root_bound());
    out.nodes = search.nodes();
    return out;
}

ExtractionResult exact_max_tfree(const Hypergraph& g, std::uint64_t budget, std::uint64_t triangle_cap) {
    auto result = exact_search(g, budget, triangle_cap);
    if (!result.optimal)
        throw BudgetExhausted("exact search exhausted its budget of " + std::to_string(budget) +
                                  " nodes; best value " + std::to_string(result.value) + ", upper bound " +
                                  std::to_string(result.upper_bound),
                              std::move(result));
    return result;
}

}  // namespace ltf
