#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace clsnet {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// splitmix64 finalizer; full avalanche, used for seeding and stateless hashing.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Independent sub-seed for (seed, stream). Streams are how parallel replicates
// stay bit-reproducible regardless of scheduling.
inline uint64_t substream_seed(uint64_t seed, uint64_t stream) {
    return mix64(mix64(seed) ^ mix64(stream ^ 0x6a09e667f3bcc909ull));
}

inline double u64_to_unit(uint64_t x) {
    return static_cast<double>(x >> 11) * 0x1.0p-53; // [0, 1)
}

// Deterministic xoshiro256++ generator. Distribution transforms are written out
// explicitly (no std::*_distribution) so identical seeds give identical draws
// on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) {
        uint64_t s = substream_seed(seed, stream);
        for (auto& w : state_) {
            s += 0x9e3779b97f4a7c15ull;
            w = mix64(s);
        }
        state_[0] |= 1ull; // never all-zero
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1).
    double uniform() { return u64_to_unit(next_u64()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound); rejection sampling, no modulo bias.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw_input("Rng::below: bound must be positive");
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Standard normal via Box-Muller; second value cached.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log1p(-u1)); // log(1-u1), safe at u1=0
        const double angle = kTwoPi * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    // Marsaglia-Tsang; shape < 1 boosted through shape+1.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw_input("Rng::gamma: shape must be positive");
        if (shape < 1.0) {
            double u = uniform();
            while (u == 0.0) u = uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / (3.0 * std::sqrt(d));
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    std::vector<double> dirichlet(const std::vector<double>& concentration) {
        std::vector<double> out(concentration.size());
        double total = 0.0;
        for (size_t k = 0; k < concentration.size(); ++k) {
            out[k] = gamma(concentration[k]);
            total += out[k];
        }
        if (total <= 0.0) {
            // all-zero draw has probability zero; fall back to the barycenter
            for (auto& v : out) v = 1.0 / static_cast<double>(out.size());
            return out;
        }
        for (auto& v : out) v /= total;
        return out;
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t state_[4];
    double cached_ = 0.0;
    bool have_cached_ = false;
};

// Rank of the unordered pair {i, j} (i < j) in lexicographic order over n nodes.
inline uint64_t pair_rank(uint32_t i, uint32_t j, uint32_t n) {
    const uint64_t ii = i;
    const uint64_t nn = n;
    return ii * (2 * nn - ii - 1) / 2 + (j - i - 1);
}

// Rank of the ordered pair (i, j), i != j.
inline uint64_t ordered_pair_rank(uint32_t i, uint32_t j, uint32_t n) {
    return static_cast<uint64_t>(i) * (n - 1) + (j < i ? j : j - 1);
}

// Stateless per-pair uniform in [0, 1). Keying Bernoulli draws by pair rank
// makes generation independent of evaluation order and lets threshold sweeps
// over one seed produce nested edge sets.
inline double pair_uniform(uint64_t pair_seed, uint64_t rank) {
    const uint64_t h = mix64(mix64(pair_seed ^ 0x9e3779b97f4a7c15ull) ^ (rank + 0x8c6e1d2f5a7b3c91ull));
    return u64_to_unit(h);
}

} // namespace clsnet
