#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Portable helpers on top of mt19937_64; the std distributions are
// implementation-defined and would make seeds non-replayable across
// toolchains.
namespace geninv::detail {

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool bernoulli(std::mt19937_64& rng, double p) { return unit(rng) < p; }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& pool) {
  return pool[uniform_index(rng, pool.size())];
}

}  // namespace geninv::detail
