#pragma once

// Law suites run by the command-line tool and the acceptance tests.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mixcat/base_category.hpp"
#include "mixcat/enrich.hpp"
#include "mixcat/law_report.hpp"
#include "mixcat/monads.hpp"
#include "mixcat/random.hpp"
#include "mixcat/relate.hpp"
#include "mixcat/sampling.hpp"

namespace mixcat {

enum class BaseKind { Rel, Mat };

/// "rel" or "mat"; throws ModelError otherwise.
BaseKind parse_base_kind(std::string_view name);
std::string_view to_string(BaseKind base);

/// Records a negative control: passes when the wrapped report has failures.
/// The first witnesses of the wrapped report become notes.
void expect_failure(LawReport& into, const std::string& suite, const std::string& law,
                    const LawReport& control);

// Dagger compact closed structure of one free model.

/// ρ ∘ (id ⊗ cap) ∘ α ∘ (cup ⊗ id) ∘ λ⁻¹ : A -> A
template <BaseCategory Base>
EnrichedMorphism<Base> enr_snake_left(const typename Base::Object& a, MonadTag tag) {
  const auto lambda_inv = enr_dagger(enr_left_unitor<Base>(a, tag));
  const auto cup_id = enr_tensor(enr_cup<Base>(a, tag), enr_id<Base>(a, tag));
  const auto alpha = enr_associator<Base>(a, a, a, tag);
  const auto id_cap = enr_tensor(enr_id<Base>(a, tag), enr_cap<Base>(a, tag));
  const auto rho = enr_right_unitor<Base>(a, tag);
  return enr_compose(rho, enr_compose(id_cap, enr_compose(alpha, enr_compose(cup_id, lambda_inv))));
}

/// λ ∘ (cap ⊗ id) ∘ α⁻¹ ∘ (id ⊗ cup) ∘ ρ⁻¹ : A -> A
template <BaseCategory Base>
EnrichedMorphism<Base> enr_snake_right(const typename Base::Object& a, MonadTag tag) {
  const auto rho_inv = enr_dagger(enr_right_unitor<Base>(a, tag));
  const auto id_cup = enr_tensor(enr_id<Base>(a, tag), enr_cup<Base>(a, tag));
  const auto alpha_inv = enr_dagger(enr_associator<Base>(a, a, a, tag));
  const auto cap_id = enr_tensor(enr_cap<Base>(a, tag), enr_id<Base>(a, tag));
  const auto lambda = enr_left_unitor<Base>(a, tag);
  return enr_compose(lambda, enr_compose(cap_id, enr_compose(alpha_inv, enr_compose(id_cup, rho_inv))));
}

/// Category, monoidal, dagger and compact closed laws of C_T on `samples`
/// seeded instances per law, objects drawn from object_pool<Base>().
template <BaseCategory Base>
LawReport check_enriched_category(MonadTag tag, std::size_t samples, std::uint64_t seed) {
  using M = EnrichedMorphism<Base>;
  Rng rng(seed);
  LawReport report;
  report.title = "dagger compact closed laws of " + std::string(Base::name) + "_" +
                 std::string(to_string(tag));
  const std::string suite = "enrich/" + std::string(Base::name) + "/" + std::string(to_string(tag));
  auto& assoc = report.add(suite, "h.(g.f) = (h.g).f");
  auto& left_id = report.add(suite, "id.f = f");
  auto& right_id = report.add(suite, "f.id = f");
  auto& bifunctor = report.add(suite, "(g.f) x (k.h) = (g x k).(f x h)");
  auto& tensor_id = report.add(suite, "id x id = id");
  auto& involution = report.add(suite, "f^dagger^dagger = f");
  auto& dagger_id = report.add(suite, "id^dagger = id");
  auto& contravariant = report.add(suite, "(g.f)^dagger = f^dagger . g^dagger");
  auto& dagger_tensor = report.add(suite, "(f x g)^dagger = f^dagger x g^dagger");
  auto& cap_cup = report.add(suite, "cap = cup^dagger");
  auto& snake_left = report.add(suite, "snake: rho.(id x cap).alpha.(cup x id).lambda^-1 = id");
  auto& snake_right = report.add(suite, "snake: lambda.(cap x id).alpha^-1.(id x cup).rho^-1 = id");
  auto& assoc_nat = report.add(suite, "associator natural");
  auto& unitor_nat = report.add(suite, "unitors natural");
  auto& symmetry_nat = report.add(suite, "symmetry natural and involutive");
  auto& free = report.add(suite, "every morphism is a mix of lifted base morphisms");
  auto& bilinear = report.add(suite, "composition is the bilinear extension");

  const auto pool = object_pool<Base>();
  auto obj = [&]() -> const typename Base::Object& { return random_object<Base>(pool, rng); };
  auto rnd = [&](const typename Base::Object& a, const typename Base::Object& b) {
    return random_enriched<Base>(tag, a, b, rng);
  };
  auto show = [](const M& m) { return serialize(m); };

  for (const auto& a : pool) {
    const auto cap = enr_cap<Base>(a, tag);
    cap_cup.check(cap == enr_dagger(enr_cup<Base>(a, tag)), [&] { return show(cap); });
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& a = obj();
    const auto& b = obj();
    const auto& c = obj();
    const auto& d = obj();
    const auto f = rnd(a, b);
    const auto g = rnd(b, c);
    const auto h = rnd(c, d);
    {
      const auto lhs = enr_compose(h, enr_compose(g, f));
      const auto rhs = enr_compose(enr_compose(h, g), f);
      assoc.check(lhs == rhs, [&] { return show(f) + "; " + show(g) + "; " + show(h); });
    }
    left_id.check(enr_compose(enr_id<Base>(b, tag), f) == f, [&] { return show(f); });
    right_id.check(enr_compose(f, enr_id<Base>(a, tag)) == f, [&] { return show(f); });
    {
      const auto k = rnd(d, a);
      const auto lhs = enr_tensor(enr_compose(g, f), enr_compose(k, h));
      const auto rhs = enr_compose(enr_tensor(g, k), enr_tensor(f, h));
      bifunctor.check(lhs == rhs, [&] { return show(f) + "; " + show(g) + "; " + show(h) + "; " + show(k); });
    }
    tensor_id.check(enr_tensor(enr_id<Base>(a, tag), enr_id<Base>(b, tag)) ==
                        enr_id<Base>(tensor(a, b), tag),
                    [&] { return a.label + ", " + b.label; });
    involution.check(enr_dagger(enr_dagger(f)) == f, [&] { return show(f); });
    dagger_id.check(enr_dagger(enr_id<Base>(a, tag)) == enr_id<Base>(a, tag), [&] { return a.label; });
    contravariant.check(enr_dagger(enr_compose(g, f)) == enr_compose(enr_dagger(f), enr_dagger(g)),
                        [&] { return show(f) + "; " + show(g); });
    dagger_tensor.check(enr_dagger(enr_tensor(f, g)) == enr_tensor(enr_dagger(f), enr_dagger(g)),
                        [&] { return show(f) + "; " + show(g); });
    {
      // Yank a random morphism through each snake.
      const auto l = enr_compose(enr_snake_left<Base>(b, tag), f);
      snake_left.check(l == f, [&] { return show(f) + " -> " + show(l); });
      const auto r = enr_compose(g, enr_snake_right<Base>(b, tag));
      snake_right.check(r == g, [&] { return show(g) + " -> " + show(r); });
    }
    {
      const auto k = rnd(a, d);
      const auto lhs = enr_compose(enr_associator<Base>(b, c, d, tag), enr_tensor(enr_tensor(f, g), h));
      const auto rhs = enr_compose(enr_tensor(f, enr_tensor(g, h)), enr_associator<Base>(a, b, c, tag));
      assoc_nat.check(lhs == rhs, [&] { return show(f) + "; " + show(g) + "; " + show(h); });
      const auto unit = Base::unit();
      const auto lu = enr_compose(enr_left_unitor<Base>(d, tag), enr_tensor(enr_id<Base>(unit, tag), k));
      const auto lu2 = enr_compose(k, enr_left_unitor<Base>(a, tag));
      const auto ru = enr_compose(enr_right_unitor<Base>(d, tag), enr_tensor(k, enr_id<Base>(unit, tag)));
      const auto ru2 = enr_compose(k, enr_right_unitor<Base>(a, tag));
      unitor_nat.check(lu == lu2 && ru == ru2, [&] { return show(k); });
      const auto s1 = enr_compose(enr_symmetry<Base>(b, c, tag), enr_tensor(f, g));
      const auto s2 = enr_compose(enr_tensor(g, f), enr_symmetry<Base>(a, b, tag));
      const auto twice = enr_compose(enr_symmetry<Base>(b, a, tag), enr_symmetry<Base>(a, b, tag));
      symmetry_nat.check(s1 == s2 && twice == enr_id<Base>(tensor(a, b), tag),
                         [&] { return show(f) + "; " + show(g); });
    }
    {
      std::vector<WeightedPart<Base>> parts;
      for (const auto& [u, w] : f.terms()) parts.emplace_back(lift_base(u, tag), w);
      const auto mixed = enr_mix<Base>(tag, a, b, parts);
      free.check(mixed == f, [&] { return show(f) + " vs " + show(mixed); });
    }
    {
      std::vector<RawTerm<Base>> raw;
      for (const auto& [u, p] : f.terms()) {
        for (const auto& [v, q] : g.terms()) raw.emplace_back(compose(v, u), p * q);
      }
      const auto expected = canonicalize<Base>(tag, a, c, raw);
      const auto got = enr_compose(g, f);
      bilinear.check(got == expected, [&] { return show(got) + " vs " + show(expected); });
    }
  }
  return report;
}

/// Convex-algebra axioms of support_mix and Eq. convexpreserve on C_{P⁺}
/// (convex weights) and C_{Pω} (subconvex weights) over Rel.
LawReport check_support_enrichment(std::size_t samples, std::uint64_t seed);

/// (Rel)_⊥ has three scalars; (Rel)_D scalars p|true> + (1-p)|false>
/// compose by multiplying p.
LawReport check_scalars(std::size_t pairs, std::uint64_t seed);

/// The distributivity equations of every free model over Rel, FinRel as a
/// union-enriched category, FinMat through its zero object, and FinRel with
/// intersection as a failing negative control.
LawReport check_enrichment_suite(std::size_t samples, std::uint64_t seed);

/// Uniform-mixture counterexample: the search, the ¼/¾ shape and the
/// failure of the uniform-distribution map to be a functor.
LawReport check_counterexample_suite(std::size_t samples, std::uint64_t seed);

/// All four embeddings on `samples` morphisms each.
LawReport check_embeddings(std::size_t samples, std::uint64_t seed);

/// Monad laws, commutativity, affine and relevant verdicts, idempotence,
/// Eilenberg-Moore examples and both composite-monad isomorphisms.
LawReport run_monad_suite(std::size_t samples, std::uint64_t seed);

/// check_enriched_category for one model and base, plus that model's
/// distributivity equations.
LawReport run_enrich_suite(MonadTag tag, BaseKind base, std::size_t samples, std::uint64_t seed);

/// Embeddings, support enrichment, scalars, enrichment conditions and the
/// counterexample.
LawReport run_relate_suite(std::size_t samples, std::uint64_t seed);

}  // namespace mixcat
