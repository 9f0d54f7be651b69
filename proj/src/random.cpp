#include "leosim/random.hpp"

#include <cmath>
#include <numbers>

namespace leosim {

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    // SplitMix64 finalizer; the (index + 1) offset keeps stream 0 distinct
    // from the master seed itself.
    std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RandomStream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    // Box-Muller, cosine branch only: sqrt(-2 ln(1-u1)) * cos(2 pi u2).
    // 1-u1 is in (0, 1], so the log is finite.
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(1.0 - u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace leosim
