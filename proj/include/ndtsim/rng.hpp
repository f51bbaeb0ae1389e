#ifndef NDTSIM_RNG_HPP
#define NDTSIM_RNG_HPP

#include <cstdint>
#include <random>

namespace ndtsim {

// Deterministic random stream for one scenario subsystem.
//
// mt19937_64 output is fully specified by the standard, and every draw below
// maps the raw 64-bit output itself instead of going through the standard
// distributions (whose sequences are implementation-defined). Replays are
// therefore identical across compilers and standard libraries, which the
// determinism acceptance criterion depends on.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    // Independent child stream. Forking reads only the construction seed, so
    // a parent can be forked at any point without perturbing its own
    // sequence, and the child is insensitive to how much the parent has run.
    SeededRng Fork(std::uint64_t tag) const {
        return SeededRng(Mix(seed_ ^ Mix(tag + 0x9e3779b97f4a7c15ull)));
    }

    std::uint64_t NextU64() { return engine_(); }

    // Uniform in [lo, hi). 53-bit mantissa mapping.
    double UniformDouble(double lo, double hi) {
        double unit = static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }

    // Uniform integer in [lo, hi], inclusive. Modulo bias is below 2^-32 for
    // every range this simulator uses (node counts, pool sizes).
    std::uint64_t UniformInt(std::uint64_t lo, std::uint64_t hi) {
        return lo + NextU64() % (hi - lo + 1);
    }

    bool Bernoulli(double p) { return UniformDouble(0.0, 1.0) < p; }

    std::uint64_t seed() const { return seed_; }

private:
    // splitmix64 finalizer; decorrelates fork seeds.
    static std::uint64_t Mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Fixed fork tags so every subsystem draws from its own stream and results
// stay comparable across protocol variants under a common seed.
namespace rng_stream {
inline constexpr std::uint64_t kMobility = 1;
inline constexpr std::uint64_t kChannel = 2;
inline constexpr std::uint64_t kTraffic = 3;
} // namespace rng_stream

} // namespace ndtsim

#endif
