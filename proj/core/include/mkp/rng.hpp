#ifndef MKP_RNG_HPP
#define MKP_RNG_HPP

#include <cstdint>

namespace mkp {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen as the instance-generator
/// PRNG because the algorithm is fixed by four constants and trivially
/// reproducible in any language, so a seed identifies an instance
/// everywhere. Substreams are derived with derive_stream below.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Fair coin from the top bit.
    bool next_coin() { return (next_u64() >> 63) != 0; }

    /// Standard normal via Box-Muller (cosine branch). Consumes exactly two
    /// uniforms per draw so the stream layout stays language-independent.
    double next_normal();

private:
    uint64_t state_;
};

/// Substream s of a 64-bit seed: state = scramble(seed XOR s * 0xA3EC647659359ACD).
/// Stream 0 is the default stream of the bare seed.
SplitMix64 derive_stream(uint64_t seed, uint64_t stream);

}  // namespace mkp

#endif
