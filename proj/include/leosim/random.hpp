// Deterministic random streams for the Monte Carlo engine.
//
// Each simulation iteration draws from its own stream, seeded from the
// master seed and the iteration index. Streams are independent of
// execution order, so iterations can run on any number of workers and
// still produce bit-identical results.
#pragma once

#include <cstdint>
#include <random>

namespace leosim {

/// Seed of the per-iteration stream `index` under `master_seed`.
///
/// SplitMix64 finalizer over master_seed + (index + 1) * 2^64/phi. The
/// mixing function is fixed and documented so any run can be reproduced
/// from its recorded master seed alone.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index);

/// One reproducible stream of variates.
///
/// mt19937_64 supplies the raw bits (the engine is fully specified by the
/// standard); uniform and normal variates are derived here instead of via
/// std::*_distribution, whose output is implementation-defined.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform();

    /// Standard normal variate via Box-Muller (cosine branch).
    /// Consumes exactly two uniforms per call.
    double normal();

private:
    std::mt19937_64 engine_;
};

}  // namespace leosim
