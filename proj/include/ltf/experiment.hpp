#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ltf/census.hpp"
#include "ltf/extract.hpp"
#include "ltf/rs_template.hpp"

namespace ltf {

enum class ExperimentKind { lower_scaling, gnp_sweep, exponent_fit, census, concentration, steiner_probe };
std::string to_string(ExperimentKind k);
ExperimentKind parse_experiment_kind(const std::string& name);

inline constexpr std::size_t kDefaultTrials = 32;
inline constexpr std::size_t kDefaultSeedCount = 20;  // seeds 0..19

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::gnp_sweep;
    std::size_t r = 3;
    std::vector<std::size_t> n;        // vertex counts
    std::vector<double> p;             // edge probabilities
    std::vector<double> x;             // p = n^(x - r); used when p is empty
    std::vector<std::size_t> t;        // clique sizes (lower_scaling)
    std::vector<std::size_t> copies;   // clique copies (lower_scaling)
    std::vector<Algorithm> algorithms; // empty: the kind's default set
    std::size_t trials = kDefaultTrials;
    std::vector<std::uint64_t> seeds;  // empty: 0..19
    unsigned threads = 1;
    std::size_t verify_cap = kDefaultVerifyCap;
    std::uint64_t budget = kDefaultExactBudget;
    std::uint64_t triangle_cap = kDefaultTriangleCap;
    std::size_t mmax = 3;                      // census
    std::uint64_t work_limit = 2'000'000'000;  // census
    bool timing = true;                        // false: runtime_ms is written as 0
};

/// Fills defaulted fields and checks grids; throws InvalidInput with the reason.
ExperimentConfig normalized(ExperimentConfig cfg);

/// One row of output: one algorithm (or "best") on one host.
struct ExperimentRecord {
    std::string kind;
    std::size_t r = 0;
    std::size_t n = 0;
    double p = 0.0;
    double x = 0.0;
    std::int64_t t_template = 0;
    std::size_t copies = 0;
    std::uint64_t seed = 0;
    std::string algo;
    std::size_t edges_host = 0;
    std::uint64_t triangles_host = 0;
    bool triangles_truncated = false;  // triangles_host is a lower bound
    std::size_t value = 0;
    bool certified = false;
    std::size_t trials = 0;
    double trial_mean = 0.0;
    double trial_sd = 0.0;
    double runtime_ms = 0.0;
    std::vector<double> extras;  // one per ExperimentReport::extra_columns
};

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::gnp_sweep;
    std::vector<std::string> extra_columns;
    std::vector<ExperimentRecord> records;
    std::vector<CensusRow> census;                            // census only
    std::vector<std::pair<std::string, std::string>> summary;  // fits and dispersion
};

ExperimentReport run_lower_scaling(const ExperimentConfig& cfg);
ExperimentReport run_gnp_sweep(const ExperimentConfig& cfg);
ExperimentReport run_exponent_fit(const ExperimentConfig& cfg);
ExperimentReport run_concentration(const ExperimentConfig& cfg);
ExperimentReport run_steiner_probe(const ExperimentConfig& cfg);
ExperimentReport run_census(const ExperimentConfig& cfg);
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Fixed columns kind..runtime_ms followed by the report's extra columns.
void write_records_csv(std::ostream& out, const ExperimentReport& report);
void write_records_json(std::ostream& out, const ExperimentReport& report);
/// "key,value" lines.
void write_summary(std::ostream& out, const ExperimentReport& report);
/// A gnuplot script reading `data_path` (CSV) and plotting best values.
void write_plot_script(std::ostream& out, const ExperimentReport& report, const std::string& data_path);

/// Per-host outcome of the algorithm set: one record per algorithm plus "best".
/// Exposed for tests; `coords` supplies the coordinate fields.
std::vector<ExperimentRecord> run_host(const Hypergraph& host, const ExperimentRecord& coords,
                                       const std::vector<Algorithm>& algorithms, const ExperimentConfig& cfg,
                                       double density);

}  // namespace ltf
