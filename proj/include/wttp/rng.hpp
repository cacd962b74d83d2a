#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace wttp {

// FNV-1a over 8-byte words; used to derive per-run seeds from
// (base_seed, instance name, p index, replicate index).
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    constexpr std::uint64_t prime = 0x100000001b3ULL;
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (v >> (8 * byte)) & 0xffULL;
        h *= prime;
    }
    return h;
}

inline std::uint64_t hash_mix(std::uint64_t h, std::string_view s) {
    constexpr std::uint64_t prime = 0x100000001b3ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= prime;
    }
    return h;
}

inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

inline std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view tag,
                                 std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t h = hash_mix(kFnvOffset, base_seed);
    h = hash_mix(h, tag);
    h = hash_mix(h, a);
    return hash_mix(h, b);
}

// mt19937_64 with hand-rolled bounded draws so that streams are identical
// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, n), n >= 1, rejection sampling
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return static_cast<std::size_t>(r % bound);
        }
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace wttp
