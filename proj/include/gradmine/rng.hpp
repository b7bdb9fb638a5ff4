#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gradmine {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seeded generator with a documented uniform construction so that runs are
// reproducible for a given seed on any platform. Child generators for
// independent work units come from derive().
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) from the top 53 bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) by rejection-free scaling; bound > 0.
    std::size_t next_index(std::size_t bound) {
        return static_cast<std::size_t>(next_unit() * static_cast<double>(bound)) % bound;
    }

    // Index sampled proportionally to non-negative weights; total must be > 0.
    std::size_t next_weighted(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double target = next_unit() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (target < acc) return i;
        }
        return weights.size() - 1;
    }

    static Rng derive(std::uint64_t seed, std::uint64_t stream) {
        return Rng(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ull)));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace gradmine
