#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace saat {

// All randomness flows through std::mt19937_64 plus the helpers below.
// The engine's output sequence is pinned by the standard; the <random>
// distribution adaptors are not, so using them would make logs differ
// between standard libraries. These helpers keep every artifact byte-stable
// for a fixed seed.

// Uniform double in [0, 1) using the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64 &gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). Modulo reduction: the bias is ~n/2^64 and is an
// accepted trade for a single-draw, implementation-independent mapping.
inline std::size_t uniform_index(std::mt19937_64 &gen, std::size_t n) {
  return static_cast<std::size_t>(gen() % static_cast<std::uint64_t>(n));
}

inline bool with_probability(std::mt19937_64 &gen, double p) {
  return uniform01(gen) < p;
}

// Number of successes in n Bernoulli(p) draws. A plain loop keeps the draw
// count (and therefore the engine state) a deterministic function of n.
inline int binomial_draw(std::mt19937_64 &gen, int n, double p) {
  int hits = 0;
  for (int i = 0; i < n; ++i) {
    if (uniform01(gen) < p) ++hits;
  }
  return hits;
}

// Fisher-Yates shuffle driven by uniform_index.
template <typename T>
void shuffle_values(std::vector<T> &values, std::mt19937_64 &gen) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = uniform_index(gen, i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace saat
