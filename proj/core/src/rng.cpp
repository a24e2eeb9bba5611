#include "fedtraj/rng.hpp"

#include <cmath>
#include <numbers>

namespace fedtraj {

std::uint64_t Rng::mix(std::uint64_t z) {
    // splitmix64 finalizer
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

Rng Rng::fork(std::string_view name) const {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return Rng(mix(key_ ^ mix(h)));
}

Rng Rng::fork(std::uint64_t index) const {
    return Rng(mix(key_ ^ mix(index + 0x9e3779b97f4a7c15ull)));
}

std::uint64_t Rng::next_below(std::uint64_t n) {
    // rejection sampling to avoid modulo bias
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double Rng::next_normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_normal_ = r * std::sin(theta);
    has_spare_normal_ = true;
    return r * std::cos(theta);
}

double Rng::next_laplace(double scale) {
    const double u = next_double() - 0.5;
    const double s = u < 0.0 ? -1.0 : 1.0;
    return -scale * s * std::log(1.0 - 2.0 * std::abs(u));
}

} // namespace fedtraj
