#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mixcat/rational.hpp"

namespace mixcat {

/// Every randomized suite draws from this engine seeded by the caller.
using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, std::size_t one_in) { return uniform_index(rng, 1, one_in) == 1; }

/// n strictly positive weights summing to 1 (or to at most 1 when subconvex).
inline std::vector<Rational> random_weights(Rng& rng, std::size_t n, bool subconvex) {
  std::vector<std::int64_t> raw(n);
  std::int64_t total = 0;
  for (auto& w : raw) {
    w = static_cast<std::int64_t>(uniform_index(rng, 1, 6));
    total += w;
  }
  if (subconvex) total += static_cast<std::int64_t>(uniform_index(rng, 0, 4));
  std::vector<Rational> out;
  out.reserve(n);
  for (auto w : raw) out.emplace_back(w, total);
  return out;
}

/// Rational in [0, 1] with a small denominator.
inline Rational random_probability(Rng& rng) {
  const auto den = static_cast<std::int64_t>(uniform_index(rng, 1, 12));
  const auto num = static_cast<std::int64_t>(uniform_index(rng, 0, static_cast<std::size_t>(den)));
  return Rational(num, den);
}

}  // namespace mixcat
