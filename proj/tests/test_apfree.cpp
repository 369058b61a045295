#include <doctest.h>

#include "ltf/apfree.hpp"
#include "ltf/random.hpp"
#include "oracles.hpp"

using namespace ltf;
using Set = std::vector<std::int64_t>;

TEST_CASE("digit sets") {
    CHECK(digit_apfree(3).elements == Set{0, 1});
    CHECK(digit_apfree(10).elements == Set{0, 1, 3, 4, 9});
    CHECK(digit_apfree(28).elements == Set{0, 1, 3, 4, 9, 10, 12, 13, 27});
    CHECK(digit_apfree(1).elements == Set{0});
    CHECK(digit_apfree(2187).size() == 128);
    CHECK(digit_apfree(28).verified);
    CHECK(digit_apfree(28).method == ApMethod::digit);
    CHECK_FALSE(oracle::has_3ap(digit_apfree(28).elements));
}

TEST_CASE("verifier") {
    const Set ap{0, 1, 2}, free{0, 1, 3, 4};
    CHECK_FALSE(verify_no_3ap(ap, Ambient::interval(3)));
    CHECK(verify_no_3ap(free, Ambient::interval(5)));
    const Set z5{1, 2};
    CHECK(verify_no_3ap(z5, Ambient::cyclic(5)));
    const Set wrap{0, 1, 2};
    CHECK_FALSE(verify_no_3ap(wrap, Ambient::cyclic(7)));
    const Set outside{0, 9};
    CHECK_THROWS_AS(verify_no_3ap(outside, Ambient::interval(5)), InvalidInput);
}

TEST_CASE("Behrend construction is always verified") {
    for (std::int64_t n : {1, 2, 10, 100, 1000, 20000}) {
        const auto s = behrend_apfree(n);
        CHECK(s.verified);
        CHECK_FALSE(oracle::has_3ap(s.elements));
        for (auto x : s.elements) CHECK(x < n);
    }
    const auto two = behrend_apfree(2);
    CHECK((two.elements == Set{0, 1} || two.elements == Set{0}));
}

TEST_CASE("best_apfree takes the larger construction") {
    for (std::int64_t n : {1, 3, 50, 2187, 100000}) {
        const auto best = best_apfree(n);
        CHECK(best.verified);
        CHECK(best.size() >= digit_apfree(n).size());
        CHECK(best.size() >= behrend_apfree(n).size());
    }
    CHECK(best_apfree(1).elements == Set{0});
    CHECK(best_apfree(3).elements == Set{0, 1});
    CHECK(best_apfree(2187).size() >= 128);
}

TEST_CASE("embedding into Z_t") {
    const auto base = make_apfree({0, 1, 3, 4}, Ambient::interval(5));
    const auto cyc = embed_cyclic(base, 15);
    CHECK(cyc.verified);
    CHECK(cyc.ambient == Ambient::cyclic(15));
    CHECK_FALSE(oracle::has_3ap(cyc.elements, 15));
    CHECK_THROWS_AS(embed_cyclic(base, 10), InvalidInput);
    CHECK(embed_cyclic(make_apfree({0}, Ambient::interval(1)), 2).verified);
}

TEST_CASE("user sets are verified, not trusted") {
    CHECK_FALSE(make_apfree({0, 2, 4}, Ambient::interval(5)).verified);
    CHECK(make_apfree({1, 2}, Ambient::cyclic(5)).verified);
    CHECK_THROWS_AS(make_apfree({1, 1}, Ambient::interval(5)), InvalidInput);
    CHECK_THROWS_AS(make_apfree({7}, Ambient::interval(5)), InvalidInput);
}

TEST_CASE("r-partite difference sets avoid every part equation") {
    for (std::size_t r : {4u, 5u, 6u}) {
        for (std::int64_t n : {10, 100, 1000}) {
            const auto s = best_template_differences(n, r);
            CHECK(s.verified);
            CHECK(s.parts == r);
            // Direct check: (k-i)a + (i-j)b + (j-k)c != 0 for distinct a, b, c.
            bool clean = true;
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i + 1; j < r; ++j)
                    for (std::size_t k = j + 1; k < r; ++k)
                        for (auto a : s.elements)
                            for (auto b : s.elements)
                                for (auto c : s.elements) {
                                    if (a == b || b == c || a == c) continue;
                                    const auto ki = static_cast<std::int64_t>(k - i), ij = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j),
                                               jk = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k);
                                    if (ki * a + ij * b + jk * c == 0) clean = false;
                                }
            CHECK(clean);
        }
    }
}

TEST_CASE("property: verifier matches brute force on random sets") {
    Rng rng(7);
    for (int round = 0; round < 300; ++round) {
        const std::int64_t size = 3 + static_cast<std::int64_t>(rng.below(40));
        const bool cyclic = rng.below(2) == 1;
        Set s;
        for (std::int64_t x = 0; x < size; ++x)
            if (rng.bernoulli(0.2)) s.push_back(x);
        const auto ambient = cyclic ? Ambient::cyclic(size) : Ambient::interval(size);
        CHECK(verify_no_3ap(s, ambient) == !oracle::has_3ap(s, cyclic ? size : 0));
    }
}

TEST_CASE("growth: digit sets reach N^0.6 at powers of three") {
    for (int k = 1; k <= 9; ++k) {
        std::int64_t n = 1;
        for (int i = 0; i < k; ++i) n *= 3;
        CHECK(static_cast<double>(best_apfree(n).size()) >= std::pow(static_cast<double>(n), 0.6));
    }
}
