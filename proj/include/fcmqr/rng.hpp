#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace fcmqr::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Derives a stage-specific sub-seed from a base seed. All pipeline stages use
// this so that changing the order of k_values does not change per-k results.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view stage, std::uint64_t salt = 0) {
    std::uint64_t state = base ^ fnv1a64(stage.data(), stage.size()) ^ (salt * 0xd6e8feb86659fd93ULL);
    return splitmix64(state);
}

// Deterministic generator: the bit stream depends only on the seed, not on
// any library's distribution implementation.
class Engine {
public:
    explicit Engine(std::uint64_t seed) : state_(seed) {
        // warm up so that small seeds do not produce correlated first draws
        splitmix64(state_);
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1]
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller, cacheless
    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

private:
    std::uint64_t state_;
};

}  // namespace fcmqr::rng
