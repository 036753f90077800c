#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace epinet {

/// Deterministic seed derivation. Every consumer of randomness owns its own
/// stream; streams are derived, never shared or split mid-run.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// FNV-1a over bytes, used to hash canonical parameter encodings into seeds.
std::uint64_t hash_string(std::string_view text);

/// Random stream with portable output. The engine (mt19937_64) is fully
/// specified by the standard; all distributions below are built from raw
/// engine output so results are identical across standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in the open interval (0, 1).
    double uniform_open01() {
        double u = uniform01();
        while (u == 0.0) u = uniform01();
        return u;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Binomial(trials, p) as a sum of Bernoulli draws. O(trials), exact.
    int binomial(int trials, double p) {
        int successes = 0;
        for (int i = 0; i < trials; ++i) {
            if (bernoulli(p)) ++successes;
        }
        return successes;
    }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// `count` distinct values from {0, ..., population-1}, sorted ascending.
    std::vector<int> sample_without_replacement(int population, int count);

  private:
    std::mt19937_64 engine_;
};

}  // namespace epinet
