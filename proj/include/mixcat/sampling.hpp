#pragma once

// Seeded generators for base and enriched morphisms used by the law suites.

#include <cstddef>
#include <string>
#include <vector>

#include "mixcat/base_category.hpp"
#include "mixcat/enrich.hpp"
#include "mixcat/monads.hpp"
#include "mixcat/random.hpp"

namespace mixcat {

/// Small objects to draw from: three sets of sizes 1..3, or dimensions 1..3.
template <BaseCategory Base>
std::vector<typename Base::Object> object_pool() {
  if constexpr (std::same_as<Base, Rel>) {
    return {make_finset("A", {"a0"}), make_finset("B", {"b0", "b1"}),
            make_finset("C", {"c0", "c1", "c2"})};
  } else {
    return {make_matobj(1), make_matobj(2), make_matobj(3)};
  }
}

template <BaseCategory Base>
const typename Base::Object& random_object(const std::vector<typename Base::Object>& pool,
                                           Rng& rng) {
  return pool[uniform_index(rng, 0, pool.size() - 1)];
}

/// Relations have each pair with probability 1/2; matrices draw entries
/// from {0, 0, 1, -1, 2, 1/2}.
template <BaseCategory Base>
Morphism<Base> random_morphism(const typename Base::Object& src, const typename Base::Object& tgt,
                               Rng& rng) {
  const auto rows = static_cast<Eigen::Index>(tgt.size());
  const auto cols = static_cast<Eigen::Index>(src.size());
  MatrixOf<Base> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      if constexpr (std::same_as<Base, Rel>) {
        m(r, c) = coin(rng, 2);
      } else {
        static const Rational choices[] = {Rational(0), Rational(0), Rational(1),
                                           Rational(-1), Rational(2), Rational(1, 2)};
        m(r, c) = choices[uniform_index(rng, 0, 5)];
      }
    }
  }
  return Morphism<Base>(src, tgt, std::move(m));
}

/// Element of T(C(src, tgt)) over a pool of one to three random base arrows.
template <BaseCategory Base>
EnrichedMorphism<Base> random_enriched(MonadTag tag, const typename Base::Object& src,
                                       const typename Base::Object& tgt, Rng& rng) {
  std::vector<Morphism<Base>> pool;
  const std::size_t n = uniform_index(rng, 1, 3);
  for (std::size_t i = 0; i < n; ++i) pool.push_back(random_morphism<Base>(src, tgt, rng));
  return EnrichedMorphism<Base>(src, tgt, random_element(tag, pool, rng));
}

}  // namespace mixcat
