#include <optional>
#include <utility>
#include <vector>

#include "doctest.h"
#include "list_monad.hpp"
#include "mixcat/monads.hpp"

using namespace mixcat;

namespace {

using D = MonadElement<int>;

D dist(std::vector<D::Term> terms) { return D::from_terms(MonadTag::Dist, std::move(terms)); }

// μ that keeps only the first inner element.
struct FirstBranchDist {
  template <class X>
  MonadElement<X> unit(const X& x) const {
    return t_unit(MonadTag::Dist, x);
  }
  template <class X>
  MonadElement<X> mult(const MonadElement<MonadElement<X>>& tt) const {
    return tt.terms().front().first;
  }
  template <class F, class X>
  auto map(F&& f, const MonadElement<X>& t) const {
    return t_map(std::forward<F>(f), t);
  }
};

}  // namespace

TEST_CASE("units") {
  const auto lifted = t_unit(MonadTag::Lift, 4);
  CHECK_FALSE(lifted.empty());
  CHECK(lifted.value() == 4);
  CHECK(t_unit(MonadTag::PPlus, 4).support() == std::vector<int>{4});
  CHECK(t_unit(MonadTag::Dist, 4).weight(4) == Rational(1));
}

TEST_CASE("distribution multiplication weighs inner distributions") {
  // 1/2 |(1/2 a + 1/2 b)> + 1/2 |a>  with a = 0, b = 1
  const auto half = Rational(1, 2);
  const auto inner1 = dist({{0, half}, {1, half}});
  const auto inner2 = dist({{0, Rational(1)}});
  const auto tt = MonadElement<D>::from_terms(MonadTag::Dist, {{inner1, half}, {inner2, half}});
  const auto flat = t_mult(tt);
  CHECK(flat.weight(0) == Rational(3, 4));
  CHECK(flat.weight(1) == Rational(1, 4));
}

TEST_CASE("powerset multiplication is union and keeps the empty set") {
  using P = MonadElement<int>;
  const auto a = P::from_set(MonadTag::POmega, {0, 1});
  const auto b = P::from_set(MonadTag::POmega, {1, 2});
  const auto e = P::bottom(MonadTag::POmega);
  const auto tt = MonadElement<P>::from_set(MonadTag::POmega, {a, b, e});
  CHECK(t_mult(tt).support() == std::vector<int>{0, 1, 2});
  CHECK(t_mult(MonadElement<P>::bottom(MonadTag::POmega)).empty());
}

TEST_CASE("canonical form collects terms") {
  const auto d = dist({{1, Rational(1, 4)}, {1, Rational(1, 4)}, {0, Rational(1, 2)}});
  CHECK(d.size() == 2);
  CHECK(d.weight(1) == Rational(1, 2));
  CHECK_THROWS_AS(dist({{0, Rational(1, 2)}}), WeightError);
  CHECK_THROWS_AS(D::from_terms(MonadTag::SubDist, {{0, Rational(6, 5)}}), WeightError);
  CHECK_THROWS_AS(D::from_terms(MonadTag::Lift, {{0, Rational(1)}, {1, Rational(1)}}), StructureError);
  CHECK_THROWS_AS(D::bottom(MonadTag::PPlus), StructureError);
  CHECK_THROWS_AS(D::from_set(MonadTag::PPlus, {}), NonEmptyError);
}

TEST_CASE("monad laws hold for all five monads") {
  for (MonadTag tag : kAllMonads) {
    CAPTURE(to_string(tag));
    const auto report = check_monad_laws(tag, 2, 3, 60);
    CHECK(report.passed());
  }
}

TEST_CASE("a corrupted multiplication is reported") {
  Rng rng(2);
  const std::vector<int> carrier{0, 1, 2};
  const auto level1 = random_elements(MonadTag::Dist, carrier, 8, rng);
  const auto level2 = random_elements(MonadTag::Dist, level1, 8, rng);
  const auto level3 = random_elements(MonadTag::Dist, level2, 8, rng);
  LawReport report;
  std::vector<D> tx = level1;
  tx.push_back(dist({{0, Rational(1, 2)}, {1, Rational(1, 2)}}));
  check_monad_laws(FirstBranchDist{}, report, "corrupted", tx, level3);
  CHECK_FALSE(report.passed());
}

TEST_CASE("commutativity of the five monads") {
  for (MonadTag tag : kAllMonads) {
    CAPTURE(to_string(tag));
    CHECK(check_commutativity(tag, 2, 1, 40).holds);
  }
}

TEST_CASE("the list monad is not commutative") {
  const testing::ListMonad list;
  const std::vector<std::vector<int>> ts{{0, 1}};
  const auto result = check_commutativity(list, ts, ts);
  CHECK_FALSE(result.holds);
  CHECK_FALSE(result.witness.empty());

  const std::vector<int> t{0, 1};
  using P = std::pair<int, int>;
  CHECK(double_strength(list, t, t) == std::vector<P>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(double_strength_swapped(list, t, t) == std::vector<P>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  const std::vector<std::vector<int>> singletons{{0}, {1}};
  CHECK(check_commutativity(list, singletons, singletons).holds);
}

TEST_CASE("affine and relevant verdicts") {
  CHECK(is_affine(MonadTag::PPlus));
  CHECK(is_affine(MonadTag::Dist));
  CHECK_FALSE(is_affine(MonadTag::Lift));
  CHECK_FALSE(is_affine(MonadTag::POmega));
  CHECK_FALSE(is_affine(MonadTag::SubDist));
  CHECK(inspect_terminal(MonadTag::Lift).size == std::optional<std::size_t>(2));
  CHECK(inspect_terminal(MonadTag::PPlus).size == std::optional<std::size_t>(1));
  CHECK(check_relevant(MonadTag::Lift, 3).passed());
  CHECK_FALSE(check_relevant(MonadTag::Dist, 2).passed());
  CHECK_FALSE(check_relevant(MonadTag::PPlus, 2).passed());
}

TEST_CASE("idempotence of the set and distribution monads") {
  CHECK(check_idempotence(MonadTag::PPlus, 3).passed());
  CHECK(check_idempotence(MonadTag::Dist, 3).passed());
}

TEST_CASE("Eilenberg-Moore algebras") {
  const auto bits = join_semilattice_algebra<int>({0, 1}, [](int a, int b) { return std::max(a, b); }, 0);
  CHECK(check_em_algebra(bits, MonadTag::POmega).passed());

  const EMAlgebraSpec<int> constant{{0, 1}, [](const MonadElement<int>&) { return 0; }};
  CHECK_FALSE(check_em_algebra(constant, MonadTag::POmega).passed());
}

TEST_CASE("subdistributions as distributions over the lifted set") {
  const auto s = D::from_terms(MonadTag::SubDist, {{0, Rational(3, 10)}});
  const auto d = subdist_to_dist(s);
  CHECK(d.weight(std::optional<int>(0)) == Rational(3, 10));
  CHECK(d.weight(std::nullopt) == Rational(7, 10));
  CHECK(dist_to_subdist(d) == s);

  const auto empty = D::bottom(MonadTag::POmega);
  const auto lifted = pomega_to_lifted(empty);
  CHECK(lifted.empty());
  CHECK(lifted_to_pomega(lifted) == empty);

  CHECK(check_pomega_iso(2).passed());
  CHECK(check_subdist_iso(2, 4, 30).passed());
}
