#pragma once

#include <cstdint>
#include <random>

namespace metaopt {

// Seeded random stream. All randomness in the library flows through an
// explicit Rng; there is no global generator. The variate transforms are
// written out here rather than delegated to <random> distributions so that
// a given seed produces the same stream with every standard library.
//
// An Rng is a value type: copying it forks the stream, which is how chains
// are replayed from an intermediate state.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform on the open interval (0, 1).
    double uniform_open();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Standard normal via Box-Muller; one value per call, nothing cached.
    double normal();
    // Exponential with unit mean.
    double exponential();

    friend bool operator==(const Rng&, const Rng&) = default;

private:
    std::mt19937_64 engine_;
};

// Derives an independent-looking seed for sub-run `index` of an ensemble
// (splitmix64 finalizer over base ^ index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace metaopt
