#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace singfake {

// Deterministic generator with explicitly specified distributions, so that
// outputs are bit-identical across platforms and standard-library versions
// (std:: distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // splitmix warm-up so nearby seeds diverge immediately
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1) with 53-bit resolution
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unbiased integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % n;
    }

    // standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// FNV-1a over the parts, used to derive per-(epoch, clip) seeds.
inline std::uint64_t hash_seed(std::uint64_t global_seed, std::uint64_t epoch,
                               std::string_view clip_id) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix_byte = [&h](std::uint8_t b) {
        h ^= b;
        h *= 1099511628211ULL;
    };
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<std::uint8_t>(global_seed >> (8 * i)));
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<std::uint8_t>(epoch >> (8 * i)));
    for (char c : clip_id) mix_byte(static_cast<std::uint8_t>(c));
    return h;
}

} // namespace singfake
