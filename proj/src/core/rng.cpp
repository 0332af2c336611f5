#include "dlpbench/core/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dlpbench {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

std::uint64_t fold(std::uint64_t acc, std::uint64_t value) {
    std::uint64_t s = acc ^ (value + 0x9e3779b97f4a7c15ULL + (acc << 6) + (acc >> 2));
    return splitmix64(s);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t stream_key(const SeedSpec& seed) {
    std::uint64_t k = fold(0x6a09e667f3bcc909ULL, seed.master_seed);
    k = fold(k, fnv1a64(seed.scenario));
    k = fold(k, seed.dataset_index);
    return fold(k, seed.stage);
}

Rng::Rng(const SeedSpec& seed) : Rng(stream_key(seed), 0) {}

Rng Rng::from_key(std::uint64_t key) { return Rng(key, 0); }

Rng::Rng(std::uint64_t key, int) : key_(key) {
    std::uint64_t s = key;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::int64_t Rng::discrete_uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("discrete_uniform: hi < lo");
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(next_u64());
    const std::uint64_t threshold = (0 - range) % range;
    for (;;) {
        const std::uint64_t x = next_u64();
        if (x >= threshold) return lo + static_cast<std::int64_t>(x % range);
    }
}

double Rng::normal(double mean, double sd) {
    if (has_spare_) {
        has_spare_ = false;
        return mean + sd * spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return mean + sd * radius * std::cos(angle);
}

bool Rng::bernoulli(double p) { return uniform() < p; }

Rng Rng::split(std::uint64_t tag) const { return Rng(fold(key_ ^ 0xa54ff53a5f1d36f1ULL, tag), 0); }

}  // namespace dlpbench
