#pragma once

#include <cstdint>

namespace lbs {

// SplitMix64: tiny, seedable and bit-identical on every platform, unlike the
// standard distributions whose output is implementation-defined.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n) for n > 0; modulo bias is below n / 2^64.
    std::uint64_t below(std::uint64_t n) noexcept { return (*this)() % n; }

    // Independent stream derived from this generator's seed and a stream index.
    SplitMix64 split(std::uint64_t stream) const noexcept {
        SplitMix64 g(state_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
        g();
        return g;
    }

private:
    std::uint64_t state_;
};

}  // namespace lbs
