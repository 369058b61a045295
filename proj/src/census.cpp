#include "ltf/census.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "ltf/error.hpp"
#include "ltf/parallel.hpp"

namespace ltf {

namespace {

using Triple = std::array<std::uint8_t, 3>;

std::size_t shared(const Triple& a, const Triple& b, std::uint8_t& common) {
    std::size_t c = 0;
    for (auto x : a)
        for (auto y : b)
            if (x == y) {
                common = x;
                ++c;
            }
    return c;
}

class CensusDfs {
  public:
    CensusDfs(std::size_t n, std::size_t m_max, const std::vector<Triple>& candidates,
              std::atomic<std::uint64_t>& work, std::uint64_t limit)
        : m_max_(m_max), candidates_(candidates), at_vertex_(n), counts_(m_max + 1, 0), work_(work), limit_(limit) {}

    // Counts every extension of {first} (depth 1 and below).
    void run_from(std::size_t first) {
        push(first);
        visit(first + 1);
        pop(first);
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

  private:
    void push(std::size_t idx) {
        chosen_.push_back(idx);
        for (auto v : candidates_[idx]) at_vertex_[v].push_back(idx);
    }

    void pop(std::size_t idx) {
        chosen_.pop_back();
        for (auto v : candidates_[idx]) at_vertex_[v].pop_back();
    }

    // Does candidate g close a loose triangle with two chosen triples?
    bool closes_triangle(const Triple& g) const {
        std::uint8_t common = 0;
        for (std::size_t a = 0; a < 3; ++a) {
            for (std::size_t ei : at_vertex_[g[a]]) {
                const Triple& e = candidates_[ei];
                if (shared(e, g, common) != 1) continue;
                for (std::size_t b = 0; b < 3; ++b) {
                    if (b == a) continue;
                    for (std::size_t fi : at_vertex_[g[b]]) {
                        const Triple& f = candidates_[fi];
                        if (shared(f, g, common) != 1) continue;
                        // e meets g only in g[a] and f only in g[b], so any
                        // common vertex of e and f lies outside g.
                        if (shared(e, f, common) == 1) return true;
                    }
                }
            }
        }
        return false;
    }

    void visit(std::size_t next) {
        if (work_.fetch_add(1, std::memory_order_relaxed) >= limit_) throw CapExceeded("census work limit exceeded");
        ++counts_[chosen_.size()];
        if (chosen_.size() == m_max_) return;
        for (std::size_t idx = next; idx < candidates_.size(); ++idx) {
            if (closes_triangle(candidates_[idx])) continue;
            push(idx);
            visit(idx + 1);
            pop(idx);
        }
    }

    std::size_t m_max_;
    const std::vector<Triple>& candidates_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<std::size_t>> at_vertex_;
    std::vector<std::uint64_t> counts_;
    std::atomic<std::uint64_t>& work_;
    std::uint64_t limit_;
};

}  // namespace

BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigCount result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::vector<CensusRow> count_tfree(std::size_t n, std::size_t m_max, const CensusOptions& opts) {
    if (n > 255) throw InvalidInput("census supports n <= 255");
    std::vector<Triple> canonical;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                canonical.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)});

    std::vector<Triple> candidates = canonical;
    if (opts.order) {
        const auto& order = *opts.order;
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::size_t> identity(canonical.size());
        std::iota(identity.begin(), identity.end(), 0);
        if (sorted != identity) throw InvalidInput("census order must be a permutation of the candidate triples");
        for (std::size_t i = 0; i < order.size(); ++i) candidates[i] = canonical[order[i]];
    }

    std::vector<std::uint64_t> counts(m_max + 1, 0);
    counts[0] = 1;
    std::atomic<std::uint64_t> work{1};
    if (m_max > 0) {
        std::vector<std::vector<std::uint64_t>> partial(candidates.size());
        parallel_for(candidates.size(), opts.threads, [&](std::size_t first) {
            CensusDfs dfs(n, m_max, candidates, work, opts.work_limit);
            dfs.run_from(first);
            partial[first] = dfs.counts();
        });
        for (const auto& p : partial)
            for (std::size_t m = 1; m < p.size(); ++m) counts[m] += p[m];
    }

    std::vector<CensusRow> rows;
    for (std::size_t m = 0; m <= m_max; ++m) rows.push_back(CensusRow{n, m, BigCount(counts[m]), 0.0, 0.0});
    return rows;
}

std::vector<CensusRow> compare_bound(std::vector<CensusRow> rows) {
    for (auto& row : rows) {
        const BigCount ceiling = binomial(binomial(row.n, 3).convert_to<std::size_t>(), row.m);
        if (row.count > ceiling)
            throw std::logic_error("census count exceeds C(C(n,3), m) at n=" + std::to_string(row.n) +
                                   " m=" + std::to_string(row.m));
        if (row.m == 0) {
            row.log_bound = 0.0;
            row.ratio = 0.0;
            continue;
        }
        const double n = static_cast<double>(row.n), m = static_cast<double>(row.m);
        row.log_bound = 3.0 * m * std::log(n * n / m);
        const double log_count = row.count > 0 ? std::log(row.count.convert_to<double>()) : 0.0;
        row.ratio = row.log_bound != 0.0 ? log_count / row.log_bound : 0.0;
    }
    return rows;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
    out << "n,m,count,log_bound,ratio\n";
    char buf[64];
    for (const auto& row : rows) {
        out << row.n << ',' << row.m << ',' << row.count << ',';
        std::snprintf(buf, sizeof buf, "%.10g", row.log_bound);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.10g", row.ratio);
        out << buf << '\n';
    }
}

}  // namespace ltf
