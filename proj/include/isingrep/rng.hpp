#ifndef ISINGREP_RNG_HPP
#define ISINGREP_RNG_HPP

#include <cstdint>
#include <random>

namespace isingrep {

/// Deterministic random stream keyed by (seed, stream). The raw engine is
/// mt19937_64 (fully specified by the standard); the derived draws below avoid
/// std::uniform_*_distribution so that sample streams are reproducible
/// byte-for-byte across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin() { return engine_() >> 63; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform in {0, ..., n-1}, unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace isingrep

#endif
