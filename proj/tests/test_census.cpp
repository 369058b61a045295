#include <doctest.h>

#include <numeric>
#include <sstream>

#include "ltf/census.hpp"
#include "oracles.hpp"

using namespace ltf;

TEST_CASE("known census values") {
    const auto rows = count_tfree(6, 3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].count == 1);
    CHECK(rows[1].count == 20);
    CHECK(rows[2].count == 190);
    CHECK(rows[3].count == 1020);
    for (std::size_t n : {3u, 4u, 5u, 7u}) CHECK(count_tfree(n, 0)[0].count == 1);
}

TEST_CASE("DFS agrees with naive subset filtering") {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto rows = count_tfree(n, 4);
        for (std::size_t m = 0; m <= 4; ++m) CHECK(rows[m].count == oracle::census(n, m));
    }
}

TEST_CASE("counts do not depend on candidate order or worker count") {
    const auto base = count_tfree(7, 4);
    std::vector<std::size_t> order(35);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(3);
    rng.shuffle(order.begin(), order.end());
    CensusOptions opts;
    opts.order = order;
    opts.threads = 3;
    const auto permuted = count_tfree(7, 4, opts);
    for (std::size_t m = 0; m <= 4; ++m) CHECK(permuted[m].count == base[m].count);

    opts.order = std::vector<std::size_t>{0, 0};
    CHECK_THROWS_AS(count_tfree(7, 4, opts), InvalidInput);
}

TEST_CASE("star and trivial bounds hold") {
    for (std::size_t n : {5u, 6u, 7u}) {
        const auto rows = compare_bound(count_tfree(n, 5));
        for (const auto& row : rows) {
            CHECK(row.count >= binomial(static_cast<std::size_t>((n - 1) * (n - 2) / 2), row.m));
            CHECK(row.count <= binomial(binomial(n, 3).convert_to<std::size_t>(), row.m));
        }
    }
}

TEST_CASE("bound comparison") {
    const auto rows = compare_bound(count_tfree(6, 3));
    CHECK(rows[0].ratio == 0.0);
    CHECK(rows[0].log_bound == 0.0);
    CHECK(rows[3].log_bound == doctest::Approx(9.0 * std::log(12.0)));
    CHECK(rows[3].ratio == doctest::Approx(std::log(1020.0) / (9.0 * std::log(12.0))));
    std::vector<CensusRow> bogus{CensusRow{6, 1, 21, 0, 0}};
    CHECK_THROWS_AS(compare_bound(bogus), std::logic_error);
}

TEST_CASE("work limit") {
    CensusOptions opts;
    opts.work_limit = 100;
    CHECK_THROWS_AS(count_tfree(7, 4, opts), CapExceeded);
}

TEST_CASE("csv output") {
    std::ostringstream out;
    write_census_csv(out, compare_bound(count_tfree(6, 1)));
    CHECK(out.str().rfind("n,m,count,log_bound,ratio\n6,0,1,0,0\n6,1,20,", 0) == 0);
}

TEST_CASE("binomial") {
    CHECK(binomial(20, 3) == 1140);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(1140, 4).str() == "70003549365");
}
