#pragma once

#include "verlab/charlab.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace verlab::test {

/// Seeded source for property tests. Every suite uses its own fixed seed.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) // inclusive
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    /// Folded character with up to `terms` orbits of weight <= max_weight.
    Character character(std::int64_t max_weight, int terms, std::int64_t max_coeff = 5, bool allow_negative = true)
    {
        Character c;
        const int count = static_cast<int>(range(0, terms));
        for (int i = 0; i < count; ++i) {
            std::int64_t coeff = range(allow_negative ? -max_coeff : 1, max_coeff);
            c.add_term(range(0, max_weight), coeff);
        }
        return c;
    }

    std::vector<std::int64_t> digits(std::int64_t p, std::int64_t count)
    {
        std::vector<std::int64_t> d(static_cast<std::size_t>(count));
        for (auto& x : d)
            x = range(0, p - 1);
        return d;
    }

private:
    std::mt19937_64 rng_;
};

/// Unfolded Laurent polynomial: weight -> coefficient over all integers.
using Laurent = std::map<std::int64_t, std::int64_t>;

inline Laurent unfold(const Character& c)
{
    Laurent out;
    for (const auto& [w, coeff] : c.terms()) {
        out[w] += coeff;
        if (w != 0)
            out[-w] += coeff;
    }
    return out;
}

/// Naive convolution of the unfolded polynomials.
inline Laurent convolve(const Laurent& a, const Laurent& b)
{
    Laurent out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b)
            out[wa + wb] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline Laurent normalized(Laurent l)
{
    std::erase_if(l, [](const auto& kv) { return kv.second == 0; });
    return l;
}

} // namespace verlab::test
