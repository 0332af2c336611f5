#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string>

namespace dlpbench {

/// Identifies one reproducible random stream: a master seed plus the
/// (scenario, dataset index, stage) tuple the stream belongs to.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::string scenario;
    std::uint64_t dataset_index = 0;
    std::uint32_t stage = 0;

    bool operator==(const SeedSpec&) const = default;
};

/// Deterministic random stream.
///
/// Algorithm (fixed, so streams are identical on every platform):
///  * the stream key is a SplitMix64 fold of master_seed, FNV-1a-64(scenario),
///    dataset_index and stage;
///  * the generator is xoshiro256** whose four state words are the first four
///    SplitMix64 outputs of the key;
///  * uniform() takes the top 53 bits of a 64-bit draw, giving [0, 1);
///  * discrete_uniform() uses modulo reduction with rejection of the biased tail;
///  * normal() uses the Box-Muller transform, caching the second variate.
///
/// split(tag) derives an independent child stream from the key, so one stream
/// can hand out per-series or per-restart streams without sharing state.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(const SeedSpec& seed);
    /// Stream from a raw 64-bit key (used by split and by tests).
    static Rng from_key(std::uint64_t key);

    result_type operator()() { return next_u64(); }
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    std::uint64_t next_u64();
    double uniform();
    double uniform(double lo, double hi);
    /// Integer uniformly distributed on [lo, hi] inclusive.
    std::int64_t discrete_uniform(std::int64_t lo, std::int64_t hi);
    double normal(double mean = 0.0, double sd = 1.0);
    bool bernoulli(double p);

    Rng split(std::uint64_t tag) const;
    std::uint64_t key() const noexcept { return key_; }

    /// Fisher-Yates shuffle driven by discrete_uniform.
    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(discrete_uniform(0, static_cast<std::int64_t>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    explicit Rng(std::uint64_t key, int);

    std::uint64_t key_;
    std::array<std::uint64_t, 4> state_{};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finaliser; exposed for stream-key derivation.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t fnv1a64(std::string_view text);
std::uint64_t stream_key(const SeedSpec& seed);

}  // namespace dlpbench
