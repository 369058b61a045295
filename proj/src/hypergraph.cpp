#include "ltf/hypergraph.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ltf {

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string edge_to_string(std::span<const Vertex> e) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << '}';
    return os.str();
}

}  // namespace

Hypergraph Hypergraph::build(std::size_t n, std::size_t r,
                             std::vector<std::vector<Vertex>> edges) {
    if (r < 2 && !edges.empty()) throw InvalidInput("uniformity must be at least 2");
    if (r > n && !edges.empty())
        throw InvalidInput("uniformity " + std::to_string(r) + " exceeds vertex count " +
                           std::to_string(n));
    if (n > std::numeric_limits<Vertex>::max()) throw InvalidInput("too many vertices");
    if (edges.size() > std::numeric_limits<EdgeId>::max()) throw InvalidInput("too many edges");

    for (auto& e : edges) {
        if (e.size() != r)
            throw InvalidInput("edge " + edge_to_string(e) + " has arity " +
                               std::to_string(e.size()) + ", expected " + std::to_string(r));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidInput("edge " + edge_to_string(e) + " has a repeated vertex");
        if (e.back() >= n)
            throw InvalidInput("edge " + edge_to_string(e) + " has a vertex outside [0, " +
                               std::to_string(n) + ")");
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidInput("duplicate edge " + edge_to_string(*dup));

    std::vector<Vertex> flat;
    flat.reserve(edges.size() * r);
    for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
    return from_canonical(n, r, std::move(flat));
}

Hypergraph Hypergraph::from_canonical(std::size_t n, std::size_t r, std::vector<Vertex> flat) {
    Hypergraph g;
    g.n_ = n;
    g.r_ = r;
    g.flat_ = std::move(flat);
    g.build_indexes();
    return g;
}

void Hypergraph::build_indexes() {
    const std::size_t m = num_edges();
    inc_offset_.assign(n_ + 1, 0);
    for (Vertex v : flat_) ++inc_offset_[v + 1];
    std::partial_sum(inc_offset_.begin(), inc_offset_.end(), inc_offset_.begin());
    incidence_.assign(flat_.size(), 0);
    std::vector<std::size_t> cursor(inc_offset_.begin(), inc_offset_.end() - 1);
    for (EdgeId e = 0; e < m; ++e)
        for (Vertex v : edge(e)) incidence_[cursor[v]++] = e;

    std::vector<std::pair<std::uint64_t, EdgeId>> entries;
    entries.reserve(m * r_ * (r_ - 1) / 2);
    for (EdgeId e = 0; e < m; ++e) {
        auto vs = edge(e);
        for (std::size_t a = 0; a < r_; ++a)
            for (std::size_t b = a + 1; b < r_; ++b) entries.emplace_back(pair_key(vs[a], vs[b]), e);
    }
    std::sort(entries.begin(), entries.end());
    pair_keys_.clear();
    pair_offset_.assign(1, 0);
    pair_edges_.clear();
    pair_edges_.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i == 0 || entries[i].first != entries[i - 1].first) {
            if (i != 0) pair_offset_.push_back(pair_edges_.size());
            pair_keys_.push_back(entries[i].first);
        }
        pair_edges_.push_back(entries[i].second);
    }
    if (!entries.empty()) pair_offset_.push_back(pair_edges_.size());
}

std::span<const EdgeId> Hypergraph::pair_edges(Vertex a, Vertex b) const {
    if (a == b) return {};
    const auto key = pair_key(a, b);
    auto it = std::lower_bound(pair_keys_.begin(), pair_keys_.end(), key);
    if (it == pair_keys_.end() || *it != key) return {};
    const auto idx = static_cast<std::size_t>(it - pair_keys_.begin());
    return {pair_edges_.data() + pair_offset_[idx], pair_offset_[idx + 1] - pair_offset_[idx]};
}

std::size_t Hypergraph::degree(Vertex v) const {
    if (v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    return inc_offset_[v + 1] - inc_offset_[v];
}

std::size_t Hypergraph::max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < n_; ++v) best = std::max(best, inc_offset_[v + 1] - inc_offset_[v]);
    return best;
}

std::size_t Hypergraph::codegree(std::span<const Vertex> vertices) const {
    for (Vertex v : vertices)
        if (v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    std::vector<Vertex> set(vertices.begin(), vertices.end());
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) return num_edges();
    if (set.size() > r_) return 0;
    std::span<const EdgeId> candidates =
        set.size() == 1 ? incident(set[0]) : pair_edges(set[0], set[1]);
    if (set.size() <= 2) return candidates.size();
    std::size_t count = 0;
    for (EdgeId e : candidates) {
        auto vs = edge(e);
        if (std::includes(vs.begin(), vs.end(), set.begin(), set.end())) ++count;
    }
    return count;
}

Hypergraph Hypergraph::subgraph(std::span<const EdgeId> keep) const {
    std::vector<Vertex> flat;
    flat.reserve(keep.size() * r_);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= num_edges()) throw InvalidInput("edge id out of range");
        if (i > 0 && keep[i] <= keep[i - 1]) throw InvalidInput("edge ids must be strictly increasing");
        auto e = edge(keep[i]);
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return from_canonical(n_, r_, std::move(flat));
}

bool Hypergraph::indexes_consistent() const {
    const Hypergraph rebuilt = from_canonical(n_, r_, flat_);
    return rebuilt.inc_offset_ == inc_offset_ && rebuilt.incidence_ == incidence_ &&
           rebuilt.pair_keys_ == pair_keys_ && rebuilt.pair_offset_ == pair_offset_ &&
           rebuilt.pair_edges_ == pair_edges_;
}

bool is_linear(const Hypergraph& g) {
    const std::size_t m = g.num_edges();
    for (EdgeId e = 0; e < m; ++e) {
        auto vs = g.edge(e);
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (g.pair_edges(vs[a], vs[b]).size() > 1) return false;
    }
    return true;
}

Hypergraph disjoint_union(const Hypergraph& g1, const Hypergraph& g2) {
    if (g1.uniformity() != g2.uniformity())
        throw InvalidInput("uniformity mismatch in disjoint union: " +
                           std::to_string(g1.uniformity()) + " vs " + std::to_string(g2.uniformity()));
    const std::size_t r = g1.uniformity();
    const auto shift = static_cast<Vertex>(g1.num_vertices());
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(g1.num_edges() + g2.num_edges());
    for (EdgeId e = 0; e < g1.num_edges(); ++e) {
        auto vs = g1.edge(e);
        edges.emplace_back(vs.begin(), vs.end());
    }
    for (EdgeId e = 0; e < g2.num_edges(); ++e) {
        auto& out = edges.emplace_back();
        for (Vertex v : g2.edge(e)) out.push_back(v + shift);
    }
    return Hypergraph::build(g1.num_vertices() + g2.num_vertices(), r, std::move(edges));
}

Hypergraph complete_hypergraph(std::size_t n, std::size_t r) {
    std::vector<std::vector<Vertex>> edges;
    if (r <= n && r > 0) {
        std::vector<Vertex> combo(r);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            edges.push_back(combo);
            std::size_t i = r;
            while (i > 0 && combo[i - 1] == n - r + i - 1) --i;
            if (i == 0) break;
            ++combo[i - 1];
            for (std::size_t j = i; j < r; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return Hypergraph::build(n, r, std::move(edges));
}

// ---- text format -------------------------------------------------------------

HypergraphFile read_hypergraph(std::istream& in) {
    HypergraphFile file;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, r = 0, m = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] == '#') {
            file.comments.push_back(line.substr(1));
            continue;
        }
        std::istringstream is(line);
        long long a = -1, b = -1, c = -1;
        if (!(is >> a >> b >> c) || a < 0 || b < 0 || c < 0 || !(is >> std::ws).eof())
            throw InvalidInput("line " + std::to_string(line_no) + ": expected header 'n r m'");
        n = static_cast<std::size_t>(a);
        r = static_cast<std::size_t>(b);
        m = static_cast<std::size_t>(c);
        have_header = true;
        break;
    }
    if (!have_header) throw InvalidInput("missing 'n r m' header");

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    while (edges.size() < m && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream is(line);
        std::vector<Vertex> e;
        long long v;
        while (is >> v) {
            if (v < 0) throw InvalidInput("line " + std::to_string(line_no) + ": negative vertex id");
            e.push_back(static_cast<Vertex>(v));
        }
        if (!is.eof()) throw InvalidInput("line " + std::to_string(line_no) + ": not an integer list");
        if (e.size() != r)
            throw InvalidInput("line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                               " vertex ids, got " + std::to_string(e.size()));
        if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidInput("line " + std::to_string(line_no) + ": vertex ids must be strictly increasing");
        if (!edges.empty() && !(edges.back() < e))
            throw InvalidInput("line " + std::to_string(line_no) + ": edges must be in strictly increasing lexicographic order");
        edges.push_back(std::move(e));
    }
    if (edges.size() != m)
        throw InvalidInput("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw InvalidInput("trailing content after " + std::to_string(m) + " edges");
    }
    file.graph = Hypergraph::build(n, r, std::move(edges));
    return file;
}

HypergraphFile read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_hypergraph(in);
}

void write_hypergraph(std::ostream& out, const Hypergraph& g, std::span<const std::string> comments) {
    for (const auto& c : comments) out << '#' << c << '\n';
    out << g.num_vertices() << ' ' << g.uniformity() << ' ' << g.num_edges() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto vs = g.edge(e);
        for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
        out << '\n';
    }
}

std::string to_text(const Hypergraph& g) {
    std::ostringstream os;
    write_hypergraph(os, g);
    return os.str();
}

std::string digest(const Hypergraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : to_text(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace ltf
