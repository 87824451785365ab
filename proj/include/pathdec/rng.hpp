#ifndef PATHDEC_RNG_HPP
#define PATHDEC_RNG_HPP

#include <cstdint>
#include <vector>

namespace pathdec {

// Counter-based deterministic 64-bit generator (SplitMix64 over an
// incrementing counter). Output depends only on (seed, draw index), so
// identical seeds reproduce identical streams on every platform.
// Seed 0 is valid.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derives an independent stream for a named substream; used so one
    // CLI --seed can feed several generators without overlap.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
        Rng mixer(seed ^ (0xd1342543de82ef95ULL * (stream + 1)));
        return mixer.next_u64();
    }

private:
    std::uint64_t state_;
};

}  // namespace pathdec

#endif
