#pragma once

#include <cstdint>
#include <random>

namespace agint::rng {

// Stream-derived generator: child stream i of a campaign seed is seeded
// through a splitmix64 mix of (seed, i), so trial results are identical
// regardless of execution order or worker count.
class Rng {
  public:
    static constexpr const char* kName = "mt19937_64/splitmix64-streams";

    Rng(std::uint64_t seed, std::uint64_t stream)
        : eng_(derive(seed, stream)) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on (0, 1), never exactly 0 or 1.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Unit-mean exponential.
    double expo() { return -std::log(uniform()); }

    // Standard normal, Box-Muller with a cached spare.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double m = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = m * std::sin(a);
        has_spare_ = true;
        return m * std::cos(a);
    }

  private:
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace agint::rng
