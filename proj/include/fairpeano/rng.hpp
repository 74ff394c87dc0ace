#pragma once

#include <cstdint>
#include <random>

namespace fairpeano {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Fold extra salts into a master seed so that concurrent tasks get
// independent, reproducible streams. derive_seed(s, n, trial) is the
// per-trial seed used by the experiment runner.
inline std::uint64_t derive_seed(std::uint64_t seed) { return splitmix64(seed); }

template <typename... Rest>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt, Rest... rest) {
    return derive_seed(splitmix64(seed ^ splitmix64(salt)), rest...);
}

// mt19937_64 is pinned down bit for bit by the standard, so runs reproduce
// across platforms. std::uniform_int_distribution is not, which is why
// bounded draws are done by rejection here instead.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    bool coin() { return (next_u64() >> 63) != 0; }

    // uniform on [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    // uniform on [0, 1) with 53 random bits
    double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace fairpeano
