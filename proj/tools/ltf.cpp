// ltf: loose-triangle-free subgraph extraction from the command line.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltf/census.hpp"
#include "ltf/error.hpp"
#include "ltf/experiment.hpp"
#include "ltf/extract.hpp"
#include "ltf/fit.hpp"
#include "ltf/hosts.hpp"
#include "ltf/report.hpp"
#include "ltf/rs_template.hpp"

namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::size_t trials = ltf::kDefaultTrials;
    std::string out = "-";
    std::string format = "csv";
    unsigned threads = 1;
    std::size_t verify_cap = ltf::kDefaultVerifyCap;
    std::uint64_t triangle_cap = ltf::kDefaultTriangleCap;
    bool no_timestamp = false;
};

class Output {
  public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ltf::InvalidInput("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

// Reads `key = value` lines into --key value arguments, skipping keys that
// are already on the command line so explicit flags win.
std::vector<std::string> config_args(const std::string& path, const std::vector<std::string>& given) {
    std::ifstream in(path);
    if (!in) throw ltf::InvalidInput("cannot open config file '" + path + "'");
    std::set<std::string> present;
    for (const auto& arg : given)
        if (arg.rfind("--", 0) == 0) present.insert(arg.substr(2, arg.find('=') == std::string::npos ? std::string::npos : arg.find('=') - 2));
    std::vector<std::string> args;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ltf::InvalidInput(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ltf::InvalidInput(path + ":" + std::to_string(lineno) + ": empty key");
        if (key == "config") throw ltf::InvalidInput(path + ":" + std::to_string(lineno) + ": nested config files are not supported");
        if (present.count(key)) continue;
        if (value == "true") {
            args.push_back("--" + key);
        } else if (value != "false") {
            args.push_back("--" + key);
            args.push_back(value);
        }
    }
    return args;
}

// "0..19" or "3,5,8" or a mix: "0..4,10".
std::vector<std::uint64_t> parse_seeds(const std::vector<std::string>& items) {
    std::vector<std::uint64_t> seeds;
    for (const auto& item : items) {
        const auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                seeds.push_back(std::stoull(item));
            } else {
                const auto lo = std::stoull(item.substr(0, dots)), hi = std::stoull(item.substr(dots + 2));
                if (hi < lo) throw ltf::InvalidInput("empty seed range '" + item + "'");
                for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
            }
        } catch (const std::logic_error&) {
            throw ltf::InvalidInput("bad seed '" + item + "' (expected an integer or a range a..b)");
        }
    }
    return seeds;
}

void check_format(const Globals& g) {
    if (g.format != "csv" && g.format != "json") throw ltf::InvalidInput("--format must be csv or json");
}

void timestamp_line(std::ostream& out) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated " << buf << '\n';
}

void emit_result(const Globals& g, const ltf::ExtractionResult& result) {
    Output out(g.out);
    if (g.format == "json")
        ltf::write_result_json(out.stream(), result);
    else
        ltf::write_result_csv(out.stream(), result);
}

ltf::Hypergraph load_host(const std::string& path) { return ltf::read_hypergraph_file(path).graph; }

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            continue;
        }
        const auto extra = config_args(path, args);
        args.insert(args.end(), extra.begin(), extra.end());
        break;
    }

    CLI::App app{"Loose-triangle-free subgraphs of uniform hypergraphs", "ltf"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::string config_unused;
    app.add_option("--config", config_unused, "File of 'key = value' lines mirroring the long flags; # starts a comment");
    app.add_option("--seed", g.seed, "Base seed; trial i uses splitmix64(seed ^ splitmix64(i))")->capture_default_str();
    app.add_option("--trials", g.trials, "Randomized trials per extraction")->capture_default_str();
    app.add_option("--out", g.out, "Output path, - for stdout")->capture_default_str();
    app.add_option("--format", g.format, "Result format: csv or json")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads, 0 for all cores")->capture_default_str();
    app.add_option("--verify-cap", g.verify_cap, "Largest template (edges) certified by the oracles")->capture_default_str();
    app.add_option("--triangle-cap", g.triangle_cap, "Abort when a host has more loose triangles than this")->capture_default_str();
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit the timestamp line and write runtime_ms as 0");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a host hypergraph");
    ltf::HostSpec host;
    std::string host_kind = "gnp";
    gen->add_option("--kind", host_kind, "gnp, cliques, star, complete, steiner")->capture_default_str();
    gen->add_option("--n", host.n, "Vertices");
    gen->add_option("--r", host.r, "Uniformity")->capture_default_str();
    gen->add_option("--p", host.p, "Edge probability (gnp)");
    gen->add_option("--t", host.t, "Clique size (cliques)");
    gen->add_option("--copies", host.copies, "Clique copies (cliques)")->capture_default_str();

    // template
    auto* tpl_cmd = app.add_subcommand("template", "Build a certified H(A, Z_t) template");
    std::int64_t t_target = 0, modulus = 0;
    std::size_t tpl_r = 3;
    std::vector<std::int64_t> diffs;
    tpl_cmd->add_option("--t", t_target, "Size hint: t is the smallest prime >= max(hint, r)");
    tpl_cmd->add_option("--r", tpl_r, "Uniformity")->capture_default_str();
    tpl_cmd->add_option("--modulus", modulus, "Explicit prime modulus (with --A)");
    tpl_cmd->add_option("--A", diffs, "Explicit difference set in Z_modulus")->delimiter(',');

    // extract
    auto* ext = app.add_subcommand("extract", "Extract a loose-triangle-free subgraph of a host file");
    std::string host_path, algo_name, template_path;
    std::int64_t ext_t = 0;
    ext->add_option("--host", host_path, "Host hypergraph file")->required();
    ext->add_option("--algo", algo_name, "random_hom, deletion, star, pure_deletion, exact")->required();
    ext->add_option("--template", template_path, "Template file (random_hom, deletion)");
    ext->add_option("--t", ext_t, "Template size hint; default follows the algorithm's rule");
    std::uint64_t budget = ltf::kDefaultExactBudget;
    ext->add_option("--budget", budget, "Node budget for exact")->capture_default_str();

    // exact
    auto* ex = app.add_subcommand("exact", "Maximum loose-triangle-free subgraph by branch and bound");
    std::string exact_host;
    ex->add_option("--host", exact_host, "Host hypergraph file")->required();
    ex->add_option("--budget", budget, "Node budget")->capture_default_str();

    // census
    auto* cen = app.add_subcommand("census", "Count labeled loose-triangle-free 3-graphs");
    std::size_t census_n = 6, mmax = 3;
    std::uint64_t work_limit = 2'000'000'000;
    cen->add_option("--n", census_n, "Vertices (costs grow quickly past 8)")->capture_default_str();
    cen->add_option("--mmax", mmax, "Largest edge count")->capture_default_str();
    cen->add_option("--work-limit", work_limit, "DFS node limit")->capture_default_str();

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run an experiment grid (seeds default to 0..19, trials to 32)");
    ltf::ExperimentConfig cfg;
    std::string exp_kind;
    std::vector<std::string> seed_items, algo_items;
    std::string summary_path, plot_path;
    std::size_t exp_r = 0;
    exp->add_option("--kind", exp_kind, "lower_scaling, gnp_sweep, exponent_fit, census, concentration, steiner_probe")
        ->required();
    exp->add_option("--r", exp_r, "Uniformity (default 3; 4 for steiner_probe)");
    exp->add_option("--n", cfg.n, "n grid")->delimiter(',');
    exp->add_option("--p", cfg.p, "p grid")->delimiter(',');
    exp->add_option("--x", cfg.x, "x grid, p = n^(x - r)")->delimiter(',');
    exp->add_option("--t", cfg.t, "Clique sizes (lower_scaling)")->delimiter(',');
    exp->add_option("--copies", cfg.copies, "Clique copies (lower_scaling, default 10)")->delimiter(',');
    exp->add_option("--algos", algo_items, "Algorithms to run (default depends on kind)")->delimiter(',');
    exp->add_option("--seeds", seed_items, "Seeds, e.g. 0..19 or 1,2,5")->delimiter(',');
    exp->add_option("--budget", cfg.budget, "Exact node budget")->capture_default_str();
    exp->add_option("--mmax", cfg.mmax, "Census: largest edge count")->capture_default_str();
    exp->add_option("--work-limit", cfg.work_limit, "Census: DFS node limit")->capture_default_str();
    exp->add_option("--summary", summary_path, "Write fit and dispersion summary here");
    exp->add_option("--plot", plot_path, "Write a gnuplot script here (reads the --out file)");

    // fit
    auto* fit = app.add_subcommand("fit", "Least-squares slope of log y against log x");
    std::vector<double> fx, fy;
    std::string fit_in;
    fit->add_option("--x", fx, "x values")->delimiter(',');
    fit->add_option("--y", fy, "y values")->delimiter(',');
    fit->add_option("--in", fit_in, "CSV file with x,y rows (optional header)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    check_format(g);

    if (gen->parsed()) {
        host.kind = ltf::parse_host_kind(host_kind);
        host.seed = g.seed;
        if (host.kind == ltf::HostSpec::Kind::file) throw ltf::InvalidInput("gen cannot produce a 'file' host");
        const auto graph = ltf::make_host(host);
        Output out(g.out);
        ltf::write_hypergraph(out.stream(), graph, {});
        return 0;
    }

    if (tpl_cmd->parsed()) {
        ltf::Template tpl;
        if (modulus != 0 || !diffs.empty()) {
            if (modulus == 0) throw ltf::InvalidInput("--A needs --modulus");
            tpl = ltf::rs_template(ltf::make_apfree(diffs, ltf::Ambient::cyclic(modulus), tpl_r), modulus, tpl_r,
                                   g.verify_cap);
        } else {
            if (t_target < 2) throw ltf::InvalidInput("template needs --t >= 2 or --modulus with --A");
            tpl = ltf::template_for(t_target, tpl_r, g.verify_cap);
        }
        if (!tpl.verified) std::cerr << "warning: template exceeds --verify-cap and is not certified\n";
        Output out(g.out);
        ltf::write_template(out.stream(), tpl);
        return 0;
    }

    if (ext->parsed()) {
        const auto graph = load_host(host_path);
        const auto algo = ltf::parse_algorithm(algo_name);
        ltf::TrialOptions opts;
        opts.trials = g.trials;
        opts.seed = g.seed;
        opts.threads = g.threads;
        opts.triangle_cap = g.triangle_cap;
        auto get_template = [&](std::int64_t default_hint) {
            if (!template_path.empty()) return ltf::read_template_file(template_path, g.verify_cap);
            return ltf::template_for(ext_t > 0 ? ext_t : default_hint, graph.uniformity(), g.verify_cap);
        };
        ltf::ExtractionResult result;
        switch (algo) {
            case ltf::Algorithm::star: result = ltf::star_extract(graph); break;
            case ltf::Algorithm::pure_deletion: result = ltf::deletion_extract(graph, nullptr, opts); break;
            case ltf::Algorithm::exact: result = ltf::exact_max_tfree(graph, budget, g.triangle_cap); break;
            case ltf::Algorithm::random_hom: {
                if (graph.num_edges() == 0) throw ltf::InvalidInput("random_hom needs a host with at least one edge");
                const auto tpl = get_template(ltf::default_t(graph.uniformity(), graph.max_degree()));
                result = ltf::random_hom_extract(graph, tpl, opts);
                break;
            }
            case ltf::Algorithm::deletion: {
                const double cells = ltf::binomial(graph.num_vertices(), graph.uniformity()).convert_to<double>();
                const double density = cells > 0 ? static_cast<double>(graph.num_edges()) / cells : 0.0;
                const auto tpl = get_template(
                    std::max<std::int64_t>(2, ltf::deletion_default_t(graph.num_vertices(), graph.uniformity(), density)));
                result = ltf::deletion_extract(graph, &tpl, opts);
                break;
            }
        }
        emit_result(g, result);
        return 0;
    }

    if (ex->parsed()) {
        const auto graph = load_host(exact_host);
        try {
            emit_result(g, ltf::exact_max_tfree(graph, budget, g.triangle_cap));
        } catch (const ltf::BudgetExhausted& e) {
            emit_result(g, e.best());
            throw;
        }
        return 0;
    }

    if (cen->parsed()) {
        ltf::ExperimentConfig c;
        c.kind = ltf::ExperimentKind::census;
        c.n = {census_n};
        c.mmax = mmax;
        c.work_limit = work_limit;
        c.threads = g.threads;
        if (census_n > 8 || mmax > 8)
            std::cerr << "warning: census beyond n = 8 or m = 8 may take very long; --work-limit bounds it\n";
        const auto report = ltf::run_census(c);
        Output out(g.out);
        if (g.format == "json")
            ltf::write_records_json(out.stream(), report);
        else
            ltf::write_records_csv(out.stream(), report);
        return 0;
    }

    if (exp->parsed()) {
        cfg.kind = ltf::parse_experiment_kind(exp_kind);
        cfg.r = exp_r != 0 ? exp_r : (cfg.kind == ltf::ExperimentKind::steiner_probe ? 4 : 3);
        cfg.trials = g.trials;
        cfg.threads = g.threads;
        cfg.verify_cap = g.verify_cap;
        cfg.triangle_cap = g.triangle_cap;
        cfg.timing = !g.no_timestamp;
        cfg.seeds = parse_seeds(seed_items);
        for (const auto& a : algo_items) cfg.algorithms.push_back(ltf::parse_algorithm(a));
        const auto report = ltf::run_experiment(cfg);
        {
            Output out(g.out);
            if (g.format == "json") {
                ltf::write_records_json(out.stream(), report);
            } else {
                if (!g.no_timestamp) timestamp_line(out.stream());
                ltf::write_records_csv(out.stream(), report);
            }
        }
        if (!summary_path.empty()) {
            Output s(summary_path);
            ltf::write_summary(s.stream(), report);
        } else if (!report.summary.empty() && g.out != "-") {
            ltf::write_summary(std::cerr, report);
        }
        if (!plot_path.empty()) {
            if (g.out == "-") throw ltf::InvalidInput("--plot needs --out so the script has a data file to read");
            Output p(plot_path);
            ltf::write_plot_script(p.stream(), report, g.out);
        }
        return 0;
    }

    if (fit->parsed()) {
        if (!fit_in.empty()) {
            if (!fx.empty() || !fy.empty()) throw ltf::InvalidInput("give either --in or --x/--y");
            std::ifstream in(fit_in);
            if (!in) throw ltf::InvalidInput("cannot open '" + fit_in + "'");
            std::string line;
            for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
                line = trim(line);
                if (line.empty() || line[0] == '#') continue;
                std::istringstream row(line);
                std::string a, b;
                if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
                    throw ltf::InvalidInput(fit_in + ":" + std::to_string(lineno) + ": expected x,y");
                try {
                    std::size_t used_a = 0, used_b = 0;
                    const double xa = std::stod(a, &used_a), yb = std::stod(b, &used_b);
                    fx.push_back(xa);
                    fy.push_back(yb);
                } catch (const std::logic_error&) {
                    if (lineno == 1) continue;  // header
                    throw ltf::InvalidInput(fit_in + ":" + std::to_string(lineno) + ": not a number");
                }
            }
        }
        const auto result = ltf::fit_power_law<double>(fx, fy);
        Output out(g.out);
        char buf[128];
        if (g.format == "json") {
            std::snprintf(buf, sizeof buf, "{\"slope\": %.17g, \"intercept\": %.17g, \"residual\": %.17g, \"points\": %zu}\n",
                          result.slope, result.intercept, result.residual, fx.size());
        } else {
            std::snprintf(buf, sizeof buf, "slope,intercept,residual,points\n%.17g,%.17g,%.17g,%zu\n", result.slope,
                          result.intercept, result.residual, fx.size());
        }
        out.stream() << buf;
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ltf::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ltf::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
