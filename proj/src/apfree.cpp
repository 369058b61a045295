#include "ltf/apfree.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "ltf/error.hpp"

namespace ltf {

std::string to_string(ApMethod m) {
    switch (m) {
        case ApMethod::digit: return "digit";
        case ApMethod::behrend: return "behrend";
        case ApMethod::greedy: return "greedy";
        case ApMethod::user: return "user";
    }
    return "unknown";
}

namespace {

std::vector<bool> membership(std::span<const std::int64_t> elements, Ambient ambient) {
    std::vector<bool> member(static_cast<std::size_t>(std::max<std::int64_t>(ambient.size, 0)), false);
    for (auto x : elements) {
        if (x < 0 || x >= ambient.size)
            throw InvalidInput("element " + std::to_string(x) + " outside ambient range");
        member[static_cast<std::size_t>(x)] = true;
    }
    return member;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        const std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
        std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
    }
    return g == 1 ? mod(x, m) : 0;
}

}  // namespace

bool verify_no_3ap(std::span<const std::int64_t> elements, Ambient ambient) {
    const std::int64_t size = ambient.size;
    const auto member = membership(elements, ambient);
    for (auto x : elements) {
        for (auto y : elements) {
            if (x == y) continue;
            std::int64_t z = 2 * y - x;
            if (ambient.kind == Ambient::Kind::cyclic) {
                z = mod(z, size);
                // For even t, 2y = 2x has solutions y != x; the terms must be distinct.
                if (z == x) continue;
            } else if (z < 0 || z >= size) {
                continue;
            }
            if (member[static_cast<std::size_t>(z)]) return false;
        }
    }
    return true;
}

bool verify_template_differences(std::span<const std::int64_t> elements, Ambient ambient,
                                 std::size_t parts) {
    if (parts < 3) return true;
    const std::int64_t size = ambient.size;
    const bool cyclic = ambient.kind == Ambient::Kind::cyclic;
    const auto member = membership(elements, ambient);
    const auto r = static_cast<std::int64_t>(parts);
    for (std::int64_t i = 0; i < r; ++i)
        for (std::int64_t j = i + 1; j < r; ++j)
            for (std::int64_t k = j + 1; k < r; ++k) {
                // (k-i) x + (i-j) y + (j-k) z = 0, solved for z.
                const std::int64_t cx = k - i, cy = i - j, cz = j - k;
                const std::int64_t inv = cyclic ? inverse_mod(cz, size) : 0;
                for (auto x : elements)
                    for (auto y : elements) {
                        if (x == y) continue;
                        const std::int64_t rhs = -(cx * x + cy * y);
                        if (!cyclic) {
                            if (rhs % cz != 0) continue;
                            const std::int64_t z = rhs / cz;
                            if (z < 0 || z >= size || z == x || z == y) continue;
                            if (member[static_cast<std::size_t>(z)]) return false;
                        } else if (inv != 0) {
                            const std::int64_t z = mod(mod(rhs, size) * inv, size);
                            if (z == x || z == y) continue;
                            if (member[static_cast<std::size_t>(z)]) return false;
                        } else {
                            for (auto z : elements)
                                if (z != x && z != y && mod(cz * z - rhs, size) == 0) return false;
                        }
                    }
            }
    return true;
}

ApFreeSet digit_set(std::int64_t n, std::size_t parts) {
    if (parts < 3) throw InvalidInput("digit_set needs at least 3 parts");
    const auto base = static_cast<std::int64_t>(parts);
    ApFreeSet out;
    out.ambient = Ambient::interval(std::max<std::int64_t>(n, 0));
    out.method = ApMethod::digit;
    out.parts = parts;
    // The k-th element is k written in binary and read in base `parts`.
    for (std::int64_t k = 0;; ++k) {
        std::int64_t value = 0, place = 1;
        for (std::int64_t bits = k; bits; bits >>= 1, place *= base)
            if (bits & 1) value += place;
        if (value >= n) break;
        out.elements.push_back(value);
    }
    // 0/1 digits with weights summing to at most parts - 1 never carry, and
    // digitwise a x + c z = (a + c) y over {0, 1} forces x = y = z.
    out.verified = true;
    return out;
}

ApFreeSet digit_apfree(std::int64_t n) { return digit_set(n, 3); }

namespace {

// Largest d with base(d)^k <= n, where base(d) = spread (d - 1) + 1.
std::int64_t behrend_width(std::int64_t n, int k, std::int64_t spread) {
    auto fits = [&](std::int64_t d) {
        const std::int64_t base = spread * (d - 1) + 1;
        std::int64_t v = 1;
        for (int i = 0; i < k; ++i) {
            if (v > n / base) return false;
            v *= base;
        }
        return true;
    };
    std::int64_t d = 1;
    while (fits(d + 1)) ++d;
    return d;
}

// Points of {0..d-1}^k on the most populated sphere, encoded in base spread (d-1) + 1.
// Ties between shells go to the smaller radius.
std::vector<std::int64_t> behrend_shell(std::int64_t d, int k, std::int64_t spread) {
    const std::int64_t base = spread * (d - 1) + 1;
    std::int64_t total = 1;
    for (int i = 0; i < k; ++i) total *= d;
    std::map<std::int64_t, std::int64_t> shell_size;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t norm = 0;
        for (std::int64_t rest = idx, i = 0; i < k; ++i, rest /= d) norm += (rest % d) * (rest % d);
        ++shell_size[norm];
    }
    std::int64_t best_norm = 0, best_count = -1;
    for (auto [norm, count] : shell_size)
        if (count > best_count) best_norm = norm, best_count = count;

    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(best_count));
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t norm = 0, value = 0, place = 1;
        for (std::int64_t rest = idx, i = 0; i < k; ++i, rest /= d, place *= base) {
            const std::int64_t x = rest % d;
            norm += x * x;
            value += x * place;
        }
        if (norm == best_norm) out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ApFreeSet behrend_set(std::int64_t n, std::size_t parts) {
    ApFreeSet digit = digit_set(n, parts);
    if (n < 2) return digit;

    const auto spread = static_cast<std::int64_t>(parts) - 1;
    std::vector<std::int64_t> best;
    const int k_max = static_cast<int>(std::ceil(std::sqrt(std::log2(static_cast<double>(n))))) + 2;
    for (int k = 2; k <= k_max; ++k) {
        const std::int64_t d = behrend_width(n, k, spread);
        if (d < 2) continue;
        auto shell = behrend_shell(d, k, spread);
        if (shell.size() > best.size()) best = std::move(shell);
    }
    if (best.size() <= digit.size()) return digit;

    ApFreeSet out;
    out.ambient = Ambient::interval(n);
    out.method = ApMethod::behrend;
    out.parts = parts;
    out.elements = std::move(best);
    if (out.size() <= kVerifyLimit) {
        const bool ok = parts == 3 ? verify_no_3ap(out.elements, out.ambient)
                                   : verify_template_differences(out.elements, out.ambient, parts);
        if (!ok) throw std::logic_error("Behrend shell fails its equation check");
        out.verified = true;
    }
    return out;
}

ApFreeSet behrend_apfree(std::int64_t n) { return behrend_set(n, 3); }

ApFreeSet best_apfree(std::int64_t n) {
    ApFreeSet digit = digit_apfree(n);
    ApFreeSet behrend = behrend_apfree(n);
    return behrend.size() > digit.size() ? behrend : digit;
}

ApFreeSet best_template_differences(std::int64_t n, std::size_t r) {
    if (r <= 3) return best_apfree(n);
    ApFreeSet digit = digit_set(n, r);
    ApFreeSet behrend = behrend_set(n, r);
    return behrend.size() > digit.size() ? behrend : digit;
}

ApFreeSet make_apfree(std::vector<std::int64_t> elements, Ambient ambient, std::size_t parts) {
    if (ambient.size < 0) throw InvalidInput("negative ambient size");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw InvalidInput("duplicate element in set");
    for (auto x : elements)
        if (x < 0 || x >= ambient.size)
            throw InvalidInput("element " + std::to_string(x) + " outside [0, " + std::to_string(ambient.size) + ")");
    ApFreeSet out;
    out.ambient = ambient;
    out.method = ApMethod::user;
    out.parts = std::max<std::size_t>(parts, 3);
    out.elements = std::move(elements);
    out.verified = out.size() <= kVerifyLimit && verify_no_3ap(out.elements, ambient) &&
                   verify_template_differences(out.elements, ambient, out.parts);
    return out;
}

ApFreeSet embed_cyclic(const ApFreeSet& set, std::int64_t t) {
    if (set.ambient.kind != Ambient::Kind::interval) throw InvalidInput("embed_cyclic expects an interval set");
    if (t < 1) throw InvalidInput("modulus must be positive");
    const auto spread = static_cast<std::int64_t>(std::max<std::size_t>(set.parts, 3)) - 1;
    if (!set.elements.empty()) {
        const std::int64_t top = set.elements.back();
        if (3 * top >= t || spread * top >= t)
            throw InvalidInput("cannot embed: max element " + std::to_string(top) +
                               " is too large for Z_" + std::to_string(t));
    }
    ApFreeSet out = set;
    out.ambient = Ambient::cyclic(t);
    out.verified = set.verified && out.size() <= kVerifyLimit && verify_no_3ap(out.elements, out.ambient) &&
                   verify_template_differences(out.elements, out.ambient, out.parts);
    return out;
}

}  // namespace ltf
