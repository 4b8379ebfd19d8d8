#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mixcat/cpm.hpp"

using namespace mixcat;

namespace {

using Pairs = std::set<std::pair<std::size_t, std::size_t>>;

RelMorphism on(const FinSet& a, const Pairs& pairs) {
  return relation(a, a, {pairs.begin(), pairs.end()});
}

Pairs pairs_of(const RelMorphism& r) {
  Pairs out;
  for (Eigen::Index c = 0; c < r.matrix().cols(); ++c) {
    for (Eigen::Index row = 0; row < r.matrix().rows(); ++row) {
      if (r.matrix()(row, c)) out.emplace(c, row);
    }
  }
  return out;
}

// R is S†∘S for some S : A -> E exactly when R is a union of squares; search
// over every family of subsets of A directly.
bool positive_by_search(const Pairs& r, std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  for (std::size_t family = 0; family < (std::size_t{1} << subsets); ++family) {
    Pairs u;
    for (std::size_t s = 0; s < subsets; ++s) {
      if (((family >> s) & 1U) == 0) continue;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (((s >> a) & 1U) && ((s >> b) & 1U)) u.emplace(a, b);
        }
      }
    }
    if (u == r) return true;
  }
  return false;
}

bool pure_by_definition(const Pairs& r, std::size_t n) {
  for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
    Pairs sq;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (((s >> a) & 1U) && ((s >> b) & 1U)) sq.emplace(a, b);
      }
    }
    if (sq == r) return true;
  }
  return false;
}

const FinSet kAB = make_finset("A", {"a", "b"});

}  // namespace

TEST_CASE("positivity and purity examples") {
  const auto diag = on(kAB, {{0, 0}, {1, 1}});
  CHECK(is_positive(diag));
  CHECK_FALSE(is_pure(diag));
  const auto factor = positive_factor(diag);
  REQUIRE(factor.has_value());
  CHECK(compose(dagger(*factor), *factor) == diag);

  const auto full = on(kAB, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(is_positive(full));
  CHECK(is_pure(full));

  CHECK_FALSE(is_positive(on(kAB, {{0, 1}})));
  CHECK(is_pure(on(kAB, {{0, 0}})));
  CHECK(is_pure(on(kAB, {})));
  CHECK_THROWS_AS(is_pure(relation(kAB, Rel::unit(), {})), ShapeError);
}

TEST_CASE("positivity agrees with the factor search on two and three elements") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto a = finset_of_size("X", n);
    for (const auto& r : all_relations(a, a)) {
      const auto p = pairs_of(r);
      CHECK(is_positive(r) == positive_by_search(p, n));
      CHECK(is_pure(r) == pure_by_definition(p, n));
      if (const auto s = positive_factor(r)) CHECK(compose(dagger(*s), *s) == r);
    }
  }
}

TEST_CASE("anomalies on small carriers") {
  const auto none = find_anomalies(0);
  CHECK(none.pure_from_mixed.empty());
  CHECK(none.pure_from_pure.empty());

  const auto one = find_anomalies(1);
  CHECK(one.positive == 2);
  CHECK(one.pure_from_mixed.empty());
  REQUIRE(one.pure_from_pure.size() == 1);
  CHECK(pairs_of(one.pure_from_pure[0].first).empty());
  CHECK(pairs_of(one.pure_from_pure[0].pure) == Pairs{{0, 0}});

  const auto two = find_anomalies(2);
  CHECK(two.positive == 5);
  CHECK(two.pure == 4);
  CHECK_FALSE(two.pure_from_pure.empty());

  const auto three = find_anomalies(3);
  CHECK_FALSE(three.pure_from_mixed.empty());
  for (const auto& w : three.pure_from_mixed) {
    CHECK_FALSE(is_pure(w.first));
    CHECK_FALSE(is_pure(w.second));
    CHECK(is_pure(w.pure));
  }
  CHECK(smallest_anomaly_size() == std::optional<std::size_t>(3));
  CHECK_THROWS_AS(find_anomalies(5), BoundError);
}

TEST_CASE("mixed states on two elements never union to a pure one") {
  // The only mixed positive relation on {a, b} is the diagonal.
  std::vector<Pairs> mixed;
  for (const auto& r : all_relations(kAB, kAB)) {
    const auto p = pairs_of(r);
    if (positive_by_search(p, 2) && !pure_by_definition(p, 2)) mixed.push_back(p);
  }
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0] == Pairs{{0, 0}, {1, 1}});
}

TEST_CASE("distribution mixtures keep both states") {
  const auto a = on(kAB, {{0, 0}});
  const auto b = on(kAB, {{1, 1}});
  const auto half = contrast_with_dist(a, b, Rational(1, 2));
  CHECK(half.mixture.terms().size() == 2);
  CHECK_FALSE(half.pure);
  CHECK(contrast_with_dist(a, b, Rational(1)).pure);
  CHECK_FALSE(contrast_with_dist(a, b, Rational(3, 4)).mixture ==
              contrast_with_dist(a, b, Rational(1, 4)).mixture);
  CHECK_THROWS_AS(contrast_with_dist(a, b, Rational(3, 2)), WeightError);
}

TEST_CASE("anomaly report") {
  const auto report = check_cpm_anomalies(3);
  CHECK(report.passed());
  const auto two = check_cpm_anomalies(2);
  CHECK_FALSE(two.passed());
}
