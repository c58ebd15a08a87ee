#pragma once

#include <cstdint>
#include <random>

namespace fo52 {

// Deterministic PRNG for fixture generation. mt19937_64's output sequence is
// pinned by the standard; the modulo mapping below is biased but bias is
// irrelevant here and, unlike std::uniform_int_distribution, it is identical
// on every platform.
class Prng {
public:
    explicit Prng(std::uint64_t seed) : eng_(seed * 0x9E3779B97F4A7C15ULL + 1) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish integer in [lo, hi], inclusive.
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(next() % span);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace fo52
