#include <vector>

#include "doctest.h"
#include "mixcat/enrich.hpp"
#include "mixcat/sampling.hpp"
#include "mixcat/suites.hpp"

using namespace mixcat;

namespace {

using E = EnrichedMorphism<Rel>;

const FinSet kA = make_finset("A", {"a0", "a1"});
const FinSet kB = make_finset("B", {"b0", "b1"});

RelMorphism rel(const FinSet& s, const FinSet& t, std::vector<std::pair<std::size_t, std::size_t>> p) {
  return relation(s, t, p);
}

E mix(MonadTag tag, const FinSet& s, const FinSet& t, std::vector<RawTerm<Rel>> terms) {
  return canonicalize<Rel>(tag, s, t, std::move(terms));
}

}  // namespace

TEST_CASE("identities of the free models") {
  const auto id = identity<Rel>(kA);
  const auto p = enr_id<Rel>(kA, MonadTag::POmega);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms()[0].first == id);
  CHECK(enr_id<Rel>(kA, MonadTag::Dist).payload().weight(id) == Rational(1));

  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_enriched<Rel>(MonadTag::SubDist, kA, kB, rng);
    CHECK(enr_compose(enr_id<Rel>(kB, MonadTag::SubDist), f) == f);
  }
}

TEST_CASE("lifting preserves composition") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_morphism<Rel>(kA, kB, rng);
    const auto g = random_morphism<Rel>(kB, kA, rng);
    for (MonadTag tag : kAllMonads) {
      CHECK(lift_base(compose(g, f), tag) == enr_compose(lift_base(g, tag), lift_base(f, tag)));
    }
  }
}

TEST_CASE("composition of two distributions of scalars") {
  // (1/2|T> + 1/2|F>) . (9/10|T> + 1/10|F>): only T.T is T.
  const auto u = Rel::unit();
  const auto t = rel_true();
  const auto f = rel_false();
  const auto lhs = mix(MonadTag::Dist, u, u, {{t, Rational(1, 2)}, {f, Rational(1, 2)}});
  const auto rhs = mix(MonadTag::Dist, u, u, {{t, Rational(9, 10)}, {f, Rational(1, 10)}});
  const auto got = enr_compose(lhs, rhs);
  CHECK(got.payload().weight(t) == Rational(9, 20));
  CHECK(got.payload().weight(f) == Rational(11, 20));
  CHECK(got.terms().size() == 2);
}

TEST_CASE("tensor of formal sums") {
  const auto u = rel(kA, kB, {{0, 0}});
  const auto v = rel(kA, kB, {{1, 1}});
  const auto w = rel(kA, kB, {{0, 1}});

  const auto bot = enr_bottom<Rel>(MonadTag::Lift, kA, kB);
  CHECK(enr_tensor(bot, lift_base(u, MonadTag::Lift)).is_bottom());

  const auto su = lift_base(u, MonadTag::POmega);
  const auto svw = mix(MonadTag::POmega, kA, kB, {{v, 1}, {w, 1}});
  const auto expected = mix(MonadTag::POmega, tensor(kA, kA), tensor(kB, kB),
                            {{tensor(u, v), 1}, {tensor(u, w), 1}});
  CHECK(enr_tensor(su, svw) == expected);

  const Rational half(1, 2);
  const auto left = mix(MonadTag::Dist, kA, kB, {{u, half}, {v, half}});
  const auto right = lift_base(w, MonadTag::Dist);
  const auto dist_expected = mix(MonadTag::Dist, tensor(kA, kA), tensor(kB, kB),
                                 {{tensor(u, w), half}, {tensor(v, w), half}});
  CHECK(enr_tensor(left, right) == dist_expected);
}

TEST_CASE("dagger acts termwise") {
  const auto u = rel(kA, kB, {{0, 0}, {0, 1}});
  const auto v = rel(kA, kB, {{1, 0}});
  CHECK(enr_dagger(enr_bottom<Rel>(MonadTag::Lift, kA, kB)) == enr_bottom<Rel>(MonadTag::Lift, kB, kA));
  const auto s = mix(MonadTag::POmega, kA, kB, {{u, 1}, {v, 1}});
  CHECK(enr_dagger(s) == mix(MonadTag::POmega, kB, kA, {{dagger(u), 1}, {dagger(v), 1}}));
  CHECK(enr_dagger(enr_dagger(s)) == s);
}

TEST_CASE("snakes in the free models") {
  CHECK(enr_snake_left<Rel>(kA, MonadTag::POmega) == enr_id<Rel>(kA, MonadTag::POmega));
  CHECK(enr_snake_right<Rel>(kA, MonadTag::POmega) == enr_id<Rel>(kA, MonadTag::POmega));
  for (MonadTag tag : kAllMonads) {
    CHECK(enr_cap<Rel>(kA, tag) == enr_dagger(enr_cup<Rel>(kA, tag)));
    CHECK(enr_cap<Mat>(make_matobj(2), tag) == enr_dagger(enr_cup<Mat>(make_matobj(2), tag)));
  }
  const auto state = mix(MonadTag::SubDist, Rel::unit(), kA,
                         {{rel(Rel::unit(), kA, {{0, 0}}), Rational(1, 2)},
                          {rel(Rel::unit(), kA, {{0, 1}}), Rational(1, 4)}});
  CHECK(enr_compose(enr_snake_left<Rel>(kA, MonadTag::SubDist), state) == state);
}

TEST_CASE("mixing") {
  const auto u = rel(kA, kB, {{0, 0}});
  const auto v = rel(kA, kB, {{1, 1}});
  const auto su = lift_base(u, MonadTag::POmega);
  const auto sv = lift_base(v, MonadTag::POmega);
  CHECK(enr_mix<Rel>(MonadTag::POmega, kA, kB, {{su, 1}, {sv, 1}}) ==
        mix(MonadTag::POmega, kA, kB, {{u, 1}, {v, 1}}));

  const auto n = make_finset("n", {"finance", "river"});
  const auto finance = rel(Rel::unit(), n, {{0, 0}});
  const auto river = rel(Rel::unit(), n, {{0, 1}});
  const auto bank = enr_mix<Rel>(MonadTag::Dist, Rel::unit(), n,
                                 {{lift_base(finance, MonadTag::Dist), Rational(9, 10)},
                                  {lift_base(river, MonadTag::Dist), Rational(1, 10)}});
  CHECK(bank.payload().weight(finance) == Rational(9, 10));
  CHECK(bank.payload().weight(river) == Rational(1, 10));

  const auto m = mix(MonadTag::Dist, kA, kB, {{u, Rational(1, 3)}, {v, Rational(2, 3)}});
  CHECK(enr_mix<Rel>(MonadTag::Dist, kA, kB, {{m, Rational(1, 2)}, {m, Rational(1, 2)}}) == m);

  CHECK_THROWS_AS(enr_mix<Rel>(MonadTag::Dist, kA, kB, {{m, Rational(1, 2)}}), WeightError);
  CHECK_THROWS_AS(enr_mix<Rel>(MonadTag::Lift, kA, kB,
                               {{lift_base(u, MonadTag::Lift), 1}, {lift_base(v, MonadTag::Lift), 1}}),
                  WeightError);
  CHECK_THROWS_AS(enr_mix<Rel>(MonadTag::POmega, kA, kB, {{m, 1}}), ModelError);
}

TEST_CASE("canonical form") {
  const auto f = rel(kA, kB, {{0, 0}});
  const auto g = rel(kA, kB, {{1, 0}});
  const auto c = mix(MonadTag::Dist, kA, kB, {{f, Rational(1, 4)}, {f, Rational(1, 4)}, {g, Rational(1, 2)}});
  CHECK(c == mix(MonadTag::Dist, kA, kB, {{f, Rational(1, 2)}, {g, Rational(1, 2)}}));
  CHECK(canonicalize(c) == c);
  CHECK(enr_equal(c, mix(MonadTag::Dist, kA, kB, {{g, Rational(1, 2)}, {f, Rational(1, 2)}})));
  CHECK(mix(MonadTag::POmega, kA, kB, {{f, 1}, {f, 1}, {g, 1}}).terms().size() == 2);
  CHECK(serialize(c) == "dist A -> B : 1/2*A|B|0100 + 1/2*A|B|1000");
  CHECK(serialize(enr_bottom<Rel>(MonadTag::Lift, kA, kB)) == "lift A -> B : bottom");
}

TEST_CASE("mismatches are rejected") {
  const auto f = lift_base(identity<Rel>(kA), MonadTag::Dist);
  const auto g = lift_base(identity<Rel>(kB), MonadTag::Dist);
  CHECK_THROWS_AS(enr_compose(g, f), CompositionError);
  CHECK_THROWS_AS(enr_compose(f, lift_base(identity<Rel>(kA), MonadTag::POmega)), ModelError);
  CHECK_THROWS_AS(E(kA, kB, MonadElement<RelMorphism>::unit(MonadTag::Dist, identity<Rel>(kA))),
                  CompositionError);
}

TEST_CASE("the category suite passes on a small budget") {
  for (MonadTag tag : kAllMonads) {
    CAPTURE(to_string(tag));
    CHECK(check_enriched_category<Rel>(tag, 30, 2).passed());
    CHECK(check_enriched_category<Mat>(tag, 15, 2).passed());
  }
}
