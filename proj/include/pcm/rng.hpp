#pragma once

#include <cstdint>
#include <initializer_list>

namespace pcm::rng {

// Counter-based generator: output k is finalize(base + k * GOLDEN) where finalize is the
// splitmix64 mixer. Streams for different purposes or trial indices are derived by folding
// ids into the base with the same mixer, so any (seed, purpose, trial) triple addresses an
// independent sequence without shared state. That keeps parallel experiments deterministic:
// workers never hand a generator to each other, they derive the trial's stream locally.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Stream {
public:
    // ids: purpose tag, then any substream indices (trial number, pair index, ...).
    Stream(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
        std::uint64_t b = mix(seed + kGolden);
        for (std::uint64_t id : ids) b = mix(b + kGolden * (id + 1));
        base_ = b;
    }

    explicit Stream(std::uint64_t seed) : Stream(seed, {}) {}

    Stream derived(std::uint64_t id) const {
        Stream s = *this;
        s.base_ = mix(base_ + kGolden * (id + 1));
        s.counter_ = 0;
        return s;
    }

    std::uint64_t next_u64() { return mix(base_ + (++counter_) * kGolden); }

    // [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t base_ = 0;
    std::uint64_t counter_ = 0;
};

// Purpose tags so independent subsystems never draw from overlapping streams.
enum purpose : std::uint64_t {
    kRiTrial = 1,
    kGenSaaty = 2,
    kGenConsistentPerturbed = 3,
    kGenUnitInterval = 4,
    kGenIshizakaLusti = 5,
    kEfficiencySearch = 6,
    kSimulateTrial = 7,
};

}  // namespace pcm::rng
