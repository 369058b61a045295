#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ltf/experiment.hpp"
#include "ltf/fit.hpp"
#include "ltf/hosts.hpp"

using namespace ltf;

namespace {

std::string csv(const ExperimentReport& report) {
    std::ostringstream out;
    write_records_csv(out, report);
    return out.str();
}

std::string summary_value(const ExperimentReport& report, const std::string& key) {
    for (const auto& [k, v] : report.summary)
        if (k == key) return v;
    return "<missing>";
}

}  // namespace

TEST_CASE("power-law fit recovers exact exponents") {
    for (double alpha : {-1.5, 0.0, 1.0 / 3.0, 2.0, 2.75}) {
        std::vector<double> x, y;
        for (double n : {10.0, 20.0, 40.0, 80.0, 160.0}) {
            x.push_back(n);
            y.push_back(3.5 * std::pow(n, alpha));
        }
        const auto fit = fit_power_law<double>(x, y);
        CHECK(std::abs(fit.slope - alpha) < 1e-9);
        CHECK(std::abs(fit.intercept - std::log(3.5)) < 1e-9);
        CHECK(fit.residual < 1e-9);
    }
    const std::vector<float> xf{1.f, 2.f, 4.f}, yf{5.f, 5.f, 5.f};
    CHECK(std::abs(fit_power_law<float>(xf, yf).slope) < 1e-6);
}

TEST_CASE("power-law fit input errors") {
    const std::vector<double> one{1.0}, two{1.0, 2.0}, three{1.0, 2.0, 3.0}, same{2.0, 2.0}, neg{-1.0, 2.0};
    CHECK_THROWS_AS(fit_power_law<double>(one, one), InvalidInput);
    CHECK_THROWS_AS(fit_power_law<double>(two, three), InvalidInput);
    CHECK_THROWS_AS(fit_power_law<double>(same, two), InvalidInput);
    CHECK_THROWS_AS(fit_power_law<double>(neg, two), InvalidInput);
}

TEST_CASE("config validation") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::gnp_sweep;
    CHECK_THROWS_AS(normalized(cfg), InvalidInput);
    cfg.n = {10};
    CHECK_THROWS_AS(normalized(cfg), InvalidInput);
    cfg.p = {0.1};
    const auto ok = normalized(cfg);
    CHECK(ok.seeds.size() == 20);
    CHECK(ok.seeds.back() == 19);
    CHECK(ok.trials == 32);
    cfg.x = {2.0};
    CHECK_THROWS_AS(normalized(cfg), InvalidInput);
    cfg.x.clear();
    cfg.p = {1.5};
    CHECK_THROWS_AS(normalized(cfg), InvalidInput);

    ExperimentConfig fit;
    fit.kind = ExperimentKind::exponent_fit;
    fit.n = {10, 10};
    fit.x = {2.0};
    CHECK_THROWS_AS(normalized(fit), InvalidInput);

    ExperimentConfig steiner;
    steiner.kind = ExperimentKind::steiner_probe;
    steiner.n = {6};
    CHECK_THROWS_AS(normalized(steiner), InvalidInput);
    CHECK_THROWS_AS(parse_experiment_kind("sweep"), InvalidInput);
}

TEST_CASE("lower scaling on a single T-free clique") {
    ExperimentConfig cfg;
    cfg.t = {5};
    cfg.copies = {1};
    cfg.seeds = {0};
    cfg.trials = 4;
    const auto report = run_lower_scaling(cfg);
    const auto& best = report.records.back();
    CHECK(best.algo == "best");
    CHECK(best.value == 10);
    CHECK(best.edges_host == 10);
}

TEST_CASE("lower scaling on ten copies of K_7^3") {
    ExperimentConfig cfg;
    cfg.t = {7};
    cfg.seeds = {0, 1};
    cfg.trials = 4;
    const auto report = run_lower_scaling(cfg);
    const auto single = exact_max_tfree(complete_hypergraph(7, 3)).value;
    for (const auto& rec : report.records) {
        CHECK(rec.certified);
        CHECK(rec.n == 70);
        CHECK(rec.extras[0] == 15.0);   // delta
        CHECK(rec.extras[3] == 150.0);  // star per clique, summed
        CHECK(rec.extras[4] == static_cast<double>(single));
        CHECK(rec.extras[1] > 0.0);
        CHECK(rec.extras[1] <= 1.0);
        if (rec.algo == "exact") CHECK(rec.value == 10 * single);
    }
}

TEST_CASE("gnp sweep envelope and reference columns") {
    ExperimentConfig cfg;
    cfg.n = {14};
    cfg.p = {0.02, 0.1, 0.3};
    cfg.seeds = {0, 1, 2};
    cfg.trials = 4;
    const auto report = run_gnp_sweep(cfg);
    CHECK(report.extra_columns[0] == "ref_p_binom");
    CHECK(report.extra_columns[1] == "ref_p13_n2");
    std::size_t star = 0, pure = 0;
    for (const auto& rec : report.records) {
        CHECK(rec.certified);
        CHECK(rec.value <= rec.edges_host);
        if (rec.algo == "star") star = rec.value;
        if (rec.algo == "pure_deletion") pure = rec.value;
        if (rec.algo == "best") {
            CHECK(rec.value >= star);
            CHECK(rec.value >= pure);
            CHECK(static_cast<double>(rec.value) >= rec.extras[3]);
            CHECK(rec.extras[0] == doctest::Approx(rec.p * 364.0));
            CHECK(rec.extras[1] == doctest::Approx(std::cbrt(rec.p) * 196.0));
        }
    }
}

TEST_CASE("gnp sweep at p = 1 on six vertices stays below the exact optimum") {
    ExperimentConfig cfg;
    cfg.n = {6};
    cfg.p = {1.0};
    cfg.seeds = {0, 1};
    cfg.trials = 8;
    const auto exact = exact_max_tfree(complete_hypergraph(6, 3)).value;
    for (const auto& rec : run_gnp_sweep(cfg).records) CHECK(rec.value <= exact);
}

TEST_CASE("exponent fit report") {
    ExperimentConfig cfg;
    cfg.n = {12, 16, 20};
    cfg.x = {2.0};
    cfg.seeds = {0, 1};
    cfg.trials = 4;
    const auto report = run_exponent_fit(cfg);
    CHECK(summary_value(report, "bracket_ok") == "true");
    CHECK(summary_value(report, "x=2.ref_lower") == "1.666666667");
    CHECK(summary_value(report, "x=2.slope") != "<missing>");
    CHECK(summary_value(report, "note").find("limits") != std::string::npos);
}

TEST_CASE("concentration report") {
    ExperimentConfig cfg;
    cfg.n = {12};
    cfg.p = {0.2};
    cfg.seeds = {4};
    cfg.trials = 4;
    auto report = run_concentration(cfg);
    CHECK(summary_value(report, "best.sd") == "0");
    CHECK(std::stod(summary_value(report, "azuma_scale")) == doctest::Approx(std::sqrt(220.0)));

    cfg.seeds = {0, 1, 2, 3};
    cfg.algorithms = {Algorithm::star};
    cfg.timing = false;
    CHECK(csv(run_concentration(cfg)) == csv(run_concentration(cfg)));
}

TEST_CASE("steiner probe") {
    ExperimentConfig cfg;
    cfg.r = 4;
    cfg.n = {4, 9};
    cfg.seeds = {0, 1};
    const auto report = run_steiner_probe(cfg);
    for (const auto& rec : report.records) {
        CHECK(rec.certified);
        CHECK(rec.value <= rec.edges_host);
        if (rec.algo == "exact") {
            CHECK(rec.extras[1] == 1.0);
            if (rec.n == 4) CHECK(rec.value == rec.edges_host);
        }
        CHECK(rec.extras[0] == doctest::Approx(static_cast<double>(rec.value) / (rec.n * rec.n)));
    }
}

TEST_CASE("census experiment") {
    ExperimentConfig cfg;
    cfg.kind = ExperimentKind::census;
    cfg.n = {6};
    cfg.mmax = 3;
    const auto text = csv(run_experiment(cfg));
    CHECK(text.find("6,3,1020,") != std::string::npos);
}

TEST_CASE("reproducible output across thread counts") {
    ExperimentConfig cfg;
    cfg.n = {16};
    cfg.p = {0.05, 0.2};
    cfg.seeds = {0, 1, 2, 3};
    cfg.trials = 6;
    cfg.timing = false;
    const auto one = csv(run_gnp_sweep(cfg));
    cfg.threads = 3;
    CHECK(csv(run_gnp_sweep(cfg)) == one);
    CHECK(one.find("runtime_ms") != std::string::npos);
}

TEST_CASE("json mirrors csv") {
    ExperimentConfig cfg;
    cfg.n = {10};
    cfg.p = {0.3};
    cfg.seeds = {0};
    cfg.trials = 2;
    const auto report = run_gnp_sweep(cfg);
    std::ostringstream out;
    write_records_json(out, report);
    const auto rows = nlohmann::json::parse(out.str());
    REQUIRE(rows.size() == report.records.size());
    CHECK(rows[0].size() == 17 + 1 + report.extra_columns.size());  // plus the truncation flag
    CHECK(rows[0]["algo"] == report.records[0].algo);
    CHECK(rows[0]["value"] == report.records[0].value);
}
