#ifndef FEDTRAJ_RNG_HPP
#define FEDTRAJ_RNG_HPP

#include <cstdint>
#include <string_view>

namespace fedtraj {

/// Counter-based deterministic generator. Every draw is a hash of
/// (key, counter), so streams can be forked by name or index and a
/// stream's output depends only on its derivation path, never on how
/// many draws other streams made. Equal seeds give bit-identical
/// sequences, which is what makes federated replays exact.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ kKeyTag)), counter_(0) {}

    /// Child stream derived from a label. Independent of this stream's position.
    Rng fork(std::string_view name) const;
    /// Child stream derived from an index (client id, round, epoch, ...).
    Rng fork(std::uint64_t index) const;

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Integer in [0, n). n must be > 0.
    std::uint64_t next_below(std::uint64_t n);

    /// Standard normal via Box-Muller. Pairs are drawn together and the
    /// spare is cached, so consumption order stays deterministic.
    double next_normal();

    /// Laplace(0, scale) via inverse CDF.
    double next_laplace(double scale);

    /// Fisher-Yates shuffle of [first, last).
    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = next_below(i);
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
    static constexpr std::uint64_t kKeyTag = 0x5bf03635f0935ad1ull;

    static std::uint64_t mix(std::uint64_t z);

    std::uint64_t key_;
    std::uint64_t counter_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

} // namespace fedtraj

#endif // FEDTRAJ_RNG_HPP
