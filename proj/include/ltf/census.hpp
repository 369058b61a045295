#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ltf {

using BigCount = boost::multiprecision::cpp_int;

/// N_3(n, m): labeled loose-triangle-free 3-graphs on n vertices with m edges.
struct CensusRow {
    std::size_t n = 0;
    std::size_t m = 0;
    BigCount count = 0;
    double log_bound = 0.0;  // 3m ln(n^2 / m), natural log
    double ratio = 0.0;      // ln(count) / log_bound; 0 for m = 0
};

struct CensusOptions {
    std::uint64_t work_limit = 2'000'000'000;  // DFS nodes
    unsigned threads = 1;
    /// Optional relabelling of the C(n,3) candidate triples: the DFS visits
    /// candidate order[i] at position i. Counts do not depend on it.
    std::optional<std::vector<std::size_t>> order;
};

/// Exact counts for m = 0..m_max by DFS over triples in candidate order,
/// extending only with later candidates and pruning any triple that closes
/// a loose triangle with two chosen ones. Throws CapExceeded past work_limit.
std::vector<CensusRow> count_tfree(std::size_t n, std::size_t m_max, const CensusOptions& opts = {});

BigCount binomial(std::size_t n, std::size_t k);

/// Fills log_bound and ratio; throws std::logic_error if a count exceeds C(C(n,3), m).
std::vector<CensusRow> compare_bound(std::vector<CensusRow> rows);

/// CSV with columns n,m,count,log_bound,ratio.
void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);

}  // namespace ltf
