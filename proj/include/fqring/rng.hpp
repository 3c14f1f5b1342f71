#pragma once

#include <cstdint>

namespace fqring {

/// Deterministic 64-bit generator (splitmix64). Used everywhere randomness
/// is needed so that reports reproduce bit-identically across platforms and
/// thread schedules; each enumeration instance derives its own stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). n must be nonzero.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

/// Mixes a base seed with a stream tag and an instance index into an
/// independent per-instance seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t index) {
    SplitMix64 g(seed ^ (stream * 0x9e3779b97f4a7c15ULL));
    std::uint64_t a = g.next();
    SplitMix64 h(a ^ index);
    return h.next();
}

} // namespace fqring
