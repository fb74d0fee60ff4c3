#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace webweaver {

/// Named sub-streams so that every consumer of randomness inside one
/// trajectory draws from its own independent sequence. Adding a consumer
/// never perturbs the draws seen by existing ones.
enum class Stream : std::uint64_t {
    events = 1,
    forwarding = 2,
    agents = 3,
    assignment = 4,
    network_graph = 5,
    base_graph = 6,
    bootstrap = 7,
    trajectory = 8,
};

/// Deterministic, splittable random generator (xoshiro256** core, splitmix64
/// seeding). All sampling in the simulator goes through this class; the
/// standard-library distributions are avoided because their output is not
/// pinned by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    /// Derive an independent child generator. The derivation uses only the
    /// construction seed, so forking does not consume or disturb this
    /// generator's own stream.
    Rng fork(Stream stream, std::uint64_t index = 0) const {
        std::uint64_t x = seed_;
        std::uint64_t a = splitmix64(x);
        x ^= static_cast<std::uint64_t>(stream) * 0x9E3779B97F4A7C15ULL;
        std::uint64_t b = splitmix64(x);
        x ^= index + 0xD1B54A32D192ED03ULL;
        std::uint64_t c = splitmix64(x);
        return Rng(a ^ (b + 0x9E3779B97F4A7C15ULL) ^ (c << 1));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; never returns zero.
    double next_double_pos() {
        double u;
        do {
            u = 1.0 - next_double();
        } while (u <= 0.0);
        return u;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Exponential waiting time with the given rate; strictly positive.
    double exponential(double rate) {
        if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be positive");
        double dt;
        do {
            dt = -std::log(next_double_pos()) / rate;
        } while (!(dt > 0.0));
        return dt;
    }

    /// Standard normal via Box-Muller. Two uniforms per call, no cached state.
    double normal() {
        const double u1 = next_double_pos();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925 * u2);
    }

    double lognormal(double mu, double sigma) { return std::exp(mu + sigma * normal()); }

    /// Uniform integer in [0, n). Lemire multiply-shift with rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("below: n must be positive");
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t threshold = (0 - n) % n;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Index draw proportional to the (non-negative) weights. At least one
    /// weight must be positive.
    std::size_t weighted_below(std::span<const double> weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        if (!(total > 0.0)) throw std::invalid_argument("weighted_below: no positive weight");
        const double r = next_double() * total;
        double acc = 0.0;
        std::size_t last_positive = weights.size();
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0.0) continue;
            last_positive = i;
            acc += weights[i];
            if (r < acc) return i;
        }
        return last_positive;  // float round-off on the final bucket
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_;
};

}  // namespace webweaver
