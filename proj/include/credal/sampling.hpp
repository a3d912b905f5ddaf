#pragma once

// Seeded generators for acts and priors with small exact entries.
//
// Only the raw output of std::mt19937_64 is used (its sequence is fixed by the
// standard); bounded draws are done here so results do not depend on the
// standard library's distribution implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "credal/model.hpp"
#include "credal/rational.hpp"

namespace credal {

inline constexpr std::uint64_t default_seed = 20200401;

class Rng {
public:
    explicit Rng(std::uint64_t seed = default_seed) : engine_(seed) {}

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return below(2) == 1; }

    /// Rational in [lo, hi] with denominator at most max_den.
    Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
        const auto den = between(1, max_den);
        Rational r(between(lo * den, hi * den));
        r /= den;
        return r;
    }

private:
    std::mt19937_64 engine_;
};

/// Prior proportional to integer weights drawn from [min_weight, max_weight].
inline Prior random_prior(Rng& rng, std::size_t n, std::int64_t min_weight, std::int64_t max_weight) {
    RationalVector w(n);
    Rational total = 0;
    do {
        total = 0;
        for (auto& x : w) {
            x = rng.between(min_weight, max_weight);
            total += x;
        }
    } while (sgn(total) == 0);
    for (auto& x : w) x /= total;
    return Prior(std::move(w));
}

/// Acts alternating between the integer grid {0,...,10}^n and random
/// rationals in [0, 10] with denominators at most 12.
inline std::vector<UtilityProfile> sample_acts(std::size_t n_states, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<UtilityProfile> acts;
    acts.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        RationalVector u(n_states);
        for (auto& x : u) x = (k % 2 == 0) ? Rational(rng.between(0, 10)) : rng.rational(0, 10, 12);
        acts.emplace_back(std::move(u));
    }
    return acts;
}

}  // namespace credal
