#include "mkp/rng.hpp"

#include <cmath>
#include <numbers>

namespace mkp {

double SplitMix64::next_normal() {
    // u1 in (0, 1], u2 in [0, 1).
    double u1 = 1.0 - next_unit();
    double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SplitMix64 derive_stream(uint64_t seed, uint64_t stream) {
    SplitMix64 scrambler(seed ^ (stream * 0xA3EC647659359ACDULL));
    return SplitMix64(scrambler.next_u64());
}

}  // namespace mkp
