#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ltf {

/// Where a set lives: the integer interval [0, size) or the cyclic group Z_size.
struct Ambient {
    enum class Kind { interval, cyclic };
    Kind kind = Kind::interval;
    std::int64_t size = 0;

    static Ambient interval(std::int64_t n) { return {Kind::interval, n}; }
    static Ambient cyclic(std::int64_t t) { return {Kind::cyclic, t}; }
    friend bool operator==(const Ambient&, const Ambient&) = default;
};

enum class ApMethod { digit, behrend, greedy, user };
std::string to_string(ApMethod m);

/// A subset of an ambient range with a record of whether it was checked to
/// contain no three-term progression x + z = 2y of distinct elements.
///
/// `parts` > 3 records the stronger property needed by r-partite templates
/// with r = parts: no distinct x, y, z with (k-i) x + (i-j) y + (j-k) z = 0
/// for parts 0 <= i < j < k < r. For parts = 3 that is 3-AP-freeness.
struct ApFreeSet {
    Ambient ambient;
    std::vector<std::int64_t> elements;  // strictly increasing
    bool verified = false;
    ApMethod method = ApMethod::user;
    std::size_t parts = 3;

    std::size_t size() const { return elements.size(); }
};

/// Sets larger than this are not verified at construction; `verified` stays false.
inline constexpr std::size_t kVerifyLimit = 100'000;

/// Exhaustive O(|S|^2) check. Elements must lie in the ambient range.
bool verify_no_3ap(std::span<const std::int64_t> elements, Ambient ambient);

/// Exhaustive check of the `parts`-equation property described on ApFreeSet.
bool verify_template_differences(std::span<const std::int64_t> elements, Ambient ambient,
                                 std::size_t parts);

/// Integers below n whose base-3 digits are all 0 or 1.
ApFreeSet digit_apfree(std::int64_t n);

/// Integers below n whose base-`parts` digits are all 0 or 1; free of the
/// `parts`-equations (digit_apfree is parts = 3).
ApFreeSet digit_set(std::int64_t n, std::size_t parts);

/// Behrend's sphere construction over a bounded grid of (d, k); falls back to
/// the digit set when no shell beats it.
ApFreeSet behrend_apfree(std::int64_t n);

/// Larger of digit and Behrend; ties go to digit.
ApFreeSet best_apfree(std::int64_t n);

/// Behrend sphere in base (parts-1)(d-1)+1, so the weighted sums in every
/// `parts`-equation are carry-free.
ApFreeSet behrend_set(std::int64_t n, std::size_t parts);

/// Difference set for an r-partite template: best_apfree for r = 3, the
/// larger of digit_set and behrend_set for r > 3.
ApFreeSet best_template_differences(std::int64_t n, std::size_t r);

/// Wraps a user-provided interval or cyclic set, verifying it against the
/// `parts`-equations.
ApFreeSet make_apfree(std::vector<std::int64_t> elements, Ambient ambient, std::size_t parts = 3);

/// Views an interval set inside Z_t. Requires 3 * max(S) < t and
/// (parts - 1) * max(S) < t, which rule out wraparound solutions; rechecked
/// in cyclic mode.
ApFreeSet embed_cyclic(const ApFreeSet& set, std::int64_t t);

}  // namespace ltf
