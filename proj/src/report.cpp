#include "ltf/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace ltf {

void write_result_json(std::ostream& out, const ExtractionResult& result) {
    nlohmann::ordered_json j = {{"host_digest", result.host_digest},
                                {"algorithm", to_string(result.algorithm)},
                                {"params",
                                 {{"trials", result.params.trials},
                                  {"seed", result.params.seed},
                                  {"template_t", result.params.template_t},
                                  {"template_digest", result.params.template_digest},
                                  {"budget", result.params.budget}}},
                                {"value", result.value},
                                {"certified", result.certified},
                                {"trial_values", result.trial_values},
                                {"trial_mean", result.trial_mean},
                                {"trial_sd", result.trial_sd}};
    if (result.algorithm == Algorithm::exact) {
        j["optimal"] = result.optimal;
        j["upper_bound"] = result.upper_bound;
        j["nodes"] = result.nodes;
    }
    j["kept_edges"] = result.kept_edges;
    out << j.dump(2) << '\n';
}

void write_result_csv(std::ostream& out, const ExtractionResult& result) {
    char mean[32], sd[32];
    std::snprintf(mean, sizeof mean, "%.10g", result.trial_mean);
    std::snprintf(sd, sizeof sd, "%.10g", result.trial_sd);
    out << "host_digest,algorithm,value,certified,trials,seed,template_t,template_digest,budget,trial_mean,trial_sd,"
           "optimal,upper_bound,nodes,kept_edges\n";
    out << result.host_digest << ',' << to_string(result.algorithm) << ',' << result.value << ','
        << (result.certified ? "true" : "false") << ',' << result.params.trials << ',' << result.params.seed << ','
        << result.params.template_t << ',' << result.params.template_digest << ',' << result.params.budget << ','
        << mean << ',' << sd << ',';
    if (result.algorithm == Algorithm::exact)
        out << (result.optimal ? "true" : "false") << ',' << result.upper_bound << ',' << result.nodes;
    else
        out << ",,";
    out << ',';
    for (std::size_t i = 0; i < result.kept_edges.size(); ++i) out << (i ? " " : "") << result.kept_edges[i];
    out << '\n';
}

}  // namespace ltf
