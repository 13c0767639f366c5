#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace bgb {

inline constexpr const char* kRngName = "mt19937_64/splitmix64-v1";

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seeded generator; independent streams are derived from (seed, stream id).
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : eng_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n) by rejection; identical across standard libraries.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ull - (~0ull % n);
        std::uint64_t v;
        do v = eng_();
        while (v >= limit);
        return v % n;
    }

    Rng split(std::uint64_t stream) { return Rng(next(), stream); }

private:
    std::mt19937_64 eng_;
};

}  // namespace bgb
