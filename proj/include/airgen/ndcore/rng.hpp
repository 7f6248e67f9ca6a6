#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace airgen::ndcore {

/// Seeded random source. mt19937_64 output is pinned by the standard and the
/// value mappings below avoid std::uniform_*_distribution, whose sequences
/// are implementation-defined. Identical seeds therefore reproduce identical
/// draws on any platform, which checkpoint determinism relies on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, bound). Rejection sampling, bias-free.
    std::uint64_t uniform_index(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[uniform_index(i)]);
        }
    }

    /// Derives an independent child seed; used to split streams (init /
    /// shuffle / evaluation) off one master seed.
    std::uint64_t derive_seed() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace airgen::ndcore
