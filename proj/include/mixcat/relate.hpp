#pragma once

// Functors between the enriched models, the support enrichment of the
// powerset models, the uniform-mixture counterexample, and a checker for the
// distributivity equations of an arbitrary homset-enriched category.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixcat/base_category.hpp"
#include "mixcat/enrich.hpp"
#include "mixcat/errors.hpp"
#include "mixcat/law_report.hpp"
#include "mixcat/monads.hpp"
#include "mixcat/random.hpp"
#include "mixcat/sampling.hpp"

namespace mixcat {

//   BotToPOmega    f ↦ {f},   ⊥ ↦ ∅
//   PPlusToPOmega  U ↦ U
//   BotToSubDist   f ↦ 1|f>, ⊥ ↦ the empty sum
//   DistToSubDist  Σ p_i|f_i> ↦ Σ p_i|f_i>
enum class EmbeddingTag { BotToPOmega, PPlusToPOmega, BotToSubDist, DistToSubDist };

inline constexpr std::array<EmbeddingTag, 4> kAllEmbeddings{
    EmbeddingTag::BotToPOmega, EmbeddingTag::PPlusToPOmega, EmbeddingTag::BotToSubDist,
    EmbeddingTag::DistToSubDist};

std::string_view to_string(EmbeddingTag tag);
MonadTag source_model(EmbeddingTag tag);
MonadTag target_model(EmbeddingTag tag);

/// Throws ModelError when m is not in the embedding's source model.
template <BaseCategory Base>
EnrichedMorphism<Base> embed(EmbeddingTag tag, const EnrichedMorphism<Base>& m) {
  if (m.tag() != source_model(tag)) {
    throw ModelError(std::string(to_string(tag)) + " applied to a " +
                     std::string(to_string(m.tag())) + " morphism");
  }
  return canonicalize<Base>(target_model(tag), m.src(), m.tgt(), m.terms());
}

/// Σ p_i|f_i> ↦ {f_i}: Dist to PPlus and SubDist to POmega.
template <BaseCategory Base>
EnrichedMorphism<Base> support(const EnrichedMorphism<Base>& m) {
  MonadTag target;
  switch (m.tag()) {
    case MonadTag::Dist: target = MonadTag::PPlus; break;
    case MonadTag::SubDist: target = MonadTag::POmega; break;
    default:
      throw ModelError("support is defined on dist and subdist morphisms, not " +
                       std::string(to_string(m.tag())));
  }
  return EnrichedMorphism<Base>(m.src(), m.tgt(),
                                MonadElement<Morphism<Base>>::from_set(target, m.payload().support()));
}

/// Moves m into another model along embeddings and supports. Throws
/// ModelError when no such route exists.
template <BaseCategory Base>
EnrichedMorphism<Base> convert(const EnrichedMorphism<Base>& m, MonadTag target) {
  if (m.tag() == target) return m;
  for (auto e : kAllEmbeddings) {
    if (source_model(e) == m.tag() && target_model(e) == target) return embed(e, m);
  }
  if (m.tag() == MonadTag::Dist && target == MonadTag::PPlus) return support(m);
  if (m.tag() == MonadTag::SubDist && target == MonadTag::POmega) return support(m);
  if (m.tag() == MonadTag::Dist && target == MonadTag::POmega) {
    return embed(EmbeddingTag::PPlusToPOmega, support(m));
  }
  throw ModelError("no functor from " + std::string(to_string(m.tag())) + " to " +
                   std::string(to_string(target)));
}

template <BaseCategory Base>
using EnrichedFunctor = std::function<EnrichedMorphism<Base>(const EnrichedMorphism<Base>&)>;

/// Checks F(id) = id, F(g∘f) = F(g)∘F(f), F(f⊗g) = F(f)⊗F(g) and
/// F(f†) = F(f)† on `samples` seeded morphisms of the source model, plus
/// the bottom cases when the source model has one. `given` composable
/// (g, f) pairs are checked before the random ones.
template <BaseCategory Base>
LawReport check_functor(
    const std::string& suite, MonadTag from, MonadTag to, const EnrichedFunctor<Base>& functor,
    std::size_t samples, std::uint64_t seed,
    const std::vector<std::pair<EnrichedMorphism<Base>, EnrichedMorphism<Base>>>& given = {}) {
  Rng rng(seed);
  LawReport report;
  report.title = "functor " + suite;
  auto& ident = report.add(suite, "F(id) = id");
  auto& comp = report.add(suite, "F(g . f) = F(g) . F(f)");
  auto& tens = report.add(suite, "F(f x g) = F(f) x F(g)");
  auto& dag = report.add(suite, "F(f^dagger) = F(f)^dagger");
  const auto pool = object_pool<Base>();
  for (const auto& a : pool) {
    const auto lhs = functor(enr_id<Base>(a, from));
    ident.check(lhs == enr_id<Base>(a, to), [&] { return a.label + ": " + serialize(lhs); });
  }
  auto check_pair = [&](const EnrichedMorphism<Base>& g, const EnrichedMorphism<Base>& f) {
    const auto lhs = functor(enr_compose(g, f));
    const auto rhs = enr_compose(functor(g), functor(f));
    comp.check(lhs == rhs, [&] {
      return "g = " + serialize(g) + "; f = " + serialize(f) + "; F(g.f) = " + serialize(lhs) +
             "; F(g).F(f) = " + serialize(rhs);
    });
  };
  for (const auto& [g, f] : given) check_pair(g, f);
  if (has_bottom(from)) {
    const auto& a = pool[0];
    const auto& b = pool[1];
    check_pair(enr_bottom<Base>(from, b, a), random_enriched<Base>(from, a, b, rng));
    check_pair(random_enriched<Base>(from, b, a, rng), enr_bottom<Base>(from, a, b));
  }
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& a = random_object<Base>(pool, rng);
    const auto& b = random_object<Base>(pool, rng);
    const auto& c = random_object<Base>(pool, rng);
    const auto f = random_enriched<Base>(from, a, b, rng);
    const auto g = random_enriched<Base>(from, b, c, rng);
    check_pair(g, f);
    const auto h = random_enriched<Base>(from, c, a, rng);
    const auto lt = functor(enr_tensor(f, h));
    const auto rt = enr_tensor(functor(f), functor(h));
    tens.check(lt == rt, [&] { return serialize(f) + " x " + serialize(h); });
    const auto ld = functor(enr_dagger(f));
    const auto rd = enr_dagger(functor(f));
    dag.check(ld == rd, [&] { return serialize(f); });
  }
  return report;
}

template <BaseCategory Base>
LawReport check_embedding_functorial(EmbeddingTag tag, std::size_t samples, std::uint64_t seed) {
  return check_functor<Base>(
      "embedding/" + std::string(to_string(tag)), source_model(tag), target_model(tag),
      [tag](const EnrichedMorphism<Base>& m) { return embed(tag, m); }, samples, seed);
}

/// The "uniform distribution on the set" map from C_{P⁺} to C_D. Not a functor.
template <BaseCategory Base>
EnrichedMorphism<Base> uniform_distribution(const EnrichedMorphism<Base>& m) {
  if (m.tag() != MonadTag::PPlus) {
    throw ModelError("uniform distribution of a " + std::string(to_string(m.tag())) + " morphism");
  }
  const Rational w(1, static_cast<std::int64_t>(m.terms().size()));
  std::vector<RawTerm<Base>> terms;
  for (const auto& [f, unused] : m.terms()) terms.emplace_back(f, w);
  return canonicalize<Base>(MonadTag::Dist, m.src(), m.tgt(), std::move(terms));
}

/// Σ p_i · U_i = ∪ {U_i : p_i > 0}. PPlus parts need a convex weight
/// vector, POmega parts a subconvex one.
template <BaseCategory Base>
EnrichedMorphism<Base> support_mix(MonadTag tag, const typename Base::Object& src,
                                   const typename Base::Object& tgt,
                                   const std::vector<WeightedPart<Base>>& parts) {
  if (tag != MonadTag::PPlus && tag != MonadTag::POmega) {
    throw ModelError("support mixing needs pplus or pomega, not " + std::string(to_string(tag)));
  }
  Rational total;
  std::vector<Morphism<Base>> alternatives;
  for (const auto& [m, w] : parts) {
    if (m.tag() != tag) throw ModelError("part of model " + std::string(to_string(m.tag())));
    if (!(m.src() == src) || !(m.tgt() == tgt)) {
      throw CompositionError("part " + m.src().label + " -> " + m.tgt().label + " in a mix of " +
                             src.label + " -> " + tgt.label);
    }
    if (w.is_negative()) throw WeightError("negative weight " + w.str());
    total += w;
    if (!w.is_positive()) continue;
    const auto s = m.payload().support();
    alternatives.insert(alternatives.end(), s.begin(), s.end());
  }
  if (tag == MonadTag::PPlus && total != Rational(1)) {
    throw WeightError("convex weights total " + total.str() + ", expected 1/1");
  }
  if (total > Rational(1)) throw WeightError("subconvex weights total " + total.str() + " > 1");
  return EnrichedMorphism<Base>(
      src, tgt, MonadElement<Morphism<Base>>::from_set(tag, std::move(alternatives)));
}

// The uniform-mixture counterexample.

/// e = ½|f> + ½|f∘f> and its collected square.
template <BaseCategory Base>
struct UniformityReport {
  Morphism<Base> f;
  EnrichedMorphism<Base> e;
  EnrichedMorphism<Base> square;
  std::vector<Rational> weights;  // ascending
  bool uniform = true;
};

template <BaseCategory Base>
UniformityReport<Base> counterexample_uniform(const Morphism<Base>& f) {
  if (!(f.src() == f.tgt())) {
    throw ShapeError("counterexample needs an endomorphism, got " + f.src().label + " -> " +
                     f.tgt().label);
  }
  const Rational half(1, 2);
  const auto e = canonicalize<Base>(MonadTag::Dist, f.src(), f.tgt(),
                                    {{f, half}, {compose(f, f), half}});
  auto square = enr_compose(e, e);
  std::vector<Rational> weights;
  for (const auto& [g, w] : square.terms()) weights.push_back(w);
  std::sort(weights.begin(), weights.end());
  const bool uniform = std::adjacent_find(weights.begin(), weights.end(),
                                          std::not_equal_to<>()) == weights.end();
  return UniformityReport<Base>{f, e, std::move(square), std::move(weights), uniform};
}

/// "1/4,3/4"
std::string weight_shape(const std::vector<Rational>& weights);

struct CounterexampleSearch {
  std::size_t examined = 0;
  /// Every non-uniform case, ordered by carrier size, then by the function
  /// table read as a base-n number.
  std::vector<UniformityReport<Rel>> witnesses;

  /// First witness with the given weight shape.
  const UniformityReport<Rel>* find_shape(const std::string& shape) const;
};

/// Exhaustive over all functions {0..n-1} -> {0..n-1} (as relations) for
/// 1 <= n <= max_size. Throws BoundError above 5.
CounterexampleSearch search_uniform_counterexamples(std::size_t max_size = 4);

/// Successor with an absorbing last element on n elements.
RelMorphism successor_with_absorber(std::size_t n);

/// Checks the uniform-distribution map against functoriality, starting from
/// the counterexample pair {f, f∘f}.
LawReport check_uniform_functor(std::size_t samples, std::uint64_t seed);

// Enrichment conditions for arbitrary categories.

template <class M, class Obj>
struct CategoryDescription {
  std::string name;
  std::vector<Obj> objects;
  /// Morphisms of one homset to test with; may be sampled.
  std::function<std::vector<M>(const Obj&, const Obj&)> homset;
  std::function<M(const M&, const M&)> compose;
  std::function<bool(const M&, const M&)> equal = [](const M& a, const M& b) { return a == b; };
  std::function<std::string(const M&)> show;
};

enum class AlgebraKind { Pointed, Semilattice, PointedSemilattice, Convex, Subconvex };

std::string_view to_string(AlgebraKind kind);

/// Homset algebra operations. Which ones must be present depends on kind:
/// Pointed needs bottom, Semilattice needs join, PointedSemilattice both,
/// Convex needs combine, Subconvex combine and bottom.
template <class M, class Obj>
struct HomsetAlgebra {
  std::string name;
  AlgebraKind kind = AlgebraKind::Pointed;
  std::function<M(const Obj&, const Obj&)> bottom;
  std::function<M(const M&, const M&)> join;
  std::function<M(const std::vector<std::pair<M, Rational>>&)> combine;
};

/// botpreserve: ⊥∘f = ⊥ = f∘⊥. joinpreserve: (f∨g)∘h = f∘h ∨ g∘h and
/// h∘(f∨g) = h∘f ∨ h∘g. convexpreserve: (Σ p_i f_i)∘g = Σ p_i (f_i∘g) and
/// the mirrored form. Throws SpecificationError when the algebra lacks an
/// operation its kind requires.
template <class M, class Obj>
LawReport check_enrichment_conditions(const CategoryDescription<M, Obj>& cat,
                                      const HomsetAlgebra<M, Obj>& alg, std::size_t samples,
                                      std::uint64_t seed) {
  const bool pointed = alg.kind == AlgebraKind::Pointed ||
                       alg.kind == AlgebraKind::PointedSemilattice ||
                       alg.kind == AlgebraKind::Subconvex;
  const bool joins = alg.kind == AlgebraKind::Semilattice ||
                     alg.kind == AlgebraKind::PointedSemilattice;
  const bool convex = alg.kind == AlgebraKind::Convex || alg.kind == AlgebraKind::Subconvex;
  auto require = [&](bool present, const char* op) {
    if (!present) {
      throw SpecificationError(alg.name + ": a " + std::string(to_string(alg.kind)) +
                               " algebra needs " + op);
    }
  };
  if (pointed) require(static_cast<bool>(alg.bottom), "a bottom");
  if (joins) require(static_cast<bool>(alg.join), "a join");
  if (convex) require(static_cast<bool>(alg.combine), "a combine operation");
  require(static_cast<bool>(cat.homset) && static_cast<bool>(cat.compose) && !cat.objects.empty(),
          "a category with objects, homsets and composition");

  Rng rng(seed);
  LawReport report;
  report.title = "enrichment of " + cat.name + " over " + alg.name;
  const std::string suite = "enrichment/" + cat.name + "/" + alg.name;
  auto show = [&](const M& m) { return cat.show ? cat.show(m) : std::string("?"); };
  auto pick = [&](const std::vector<M>& hom) -> const M& {
    return hom[uniform_index(rng, 0, hom.size() - 1)];
  };
  auto obj = [&]() -> const Obj& { return cat.objects[uniform_index(rng, 0, cat.objects.size() - 1)]; };

  LawResult* bot_left = pointed ? &report.add(suite, "bottom . f = bottom") : nullptr;
  LawResult* bot_right = pointed ? &report.add(suite, "f . bottom = bottom") : nullptr;
  LawResult* join_left = joins ? &report.add(suite, "(f v g) . h = f.h v g.h") : nullptr;
  LawResult* join_right = joins ? &report.add(suite, "h . (f v g) = h.f v h.g") : nullptr;
  LawResult* cvx_left = convex ? &report.add(suite, "(sum p_i f_i) . g = sum p_i (f_i . g)") : nullptr;
  LawResult* cvx_right = convex ? &report.add(suite, "g . (sum p_i f_i) = sum p_i (g . f_i)") : nullptr;

  for (std::size_t i = 0; i < samples; ++i) {
    const Obj& a = obj();
    const Obj& b = obj();
    const Obj& c = obj();
    const auto hom_ab = cat.homset(a, b);
    const auto hom_bc = cat.homset(b, c);
    if (hom_ab.empty() || hom_bc.empty()) continue;
    const M& f = pick(hom_ab);
    const M& g = pick(hom_bc);
    if (pointed) {
      const M lhs = cat.compose(alg.bottom(b, c), f);
      bot_left->check(cat.equal(lhs, alg.bottom(a, c)), [&] { return "f = " + show(f) + " gives " + show(lhs); });
      const M rhs = cat.compose(g, alg.bottom(a, b));
      bot_right->check(cat.equal(rhs, alg.bottom(a, c)), [&] { return "f = " + show(g) + " gives " + show(rhs); });
    }
    if (joins) {
      const M& f2 = pick(hom_bc);
      const M lhs = cat.compose(alg.join(g, f2), f);
      const M rhs = alg.join(cat.compose(g, f), cat.compose(f2, f));
      join_left->check(cat.equal(lhs, rhs), [&] {
        return "f = " + show(g) + ", g = " + show(f2) + ", h = " + show(f) + ": " + show(lhs) +
               " vs " + show(rhs);
      });
      const M& h2 = pick(hom_ab);
      const M lhs2 = cat.compose(g, alg.join(f, h2));
      const M rhs2 = alg.join(cat.compose(g, f), cat.compose(g, h2));
      join_right->check(cat.equal(lhs2, rhs2), [&] {
        return "h = " + show(g) + ", f = " + show(f) + ", g = " + show(h2) + ": " + show(lhs2) +
               " vs " + show(rhs2);
      });
    }
    if (convex) {
      const std::size_t n = uniform_index(rng, 1, 3);
      const auto weights = random_weights(rng, n, alg.kind == AlgebraKind::Subconvex);
      std::vector<std::pair<M, Rational>> outer, left_parts, right_parts;
      std::vector<std::pair<M, Rational>> inner;
      for (std::size_t k = 0; k < n; ++k) {
        const M& fk = pick(hom_bc);
        outer.emplace_back(fk, weights[k]);
        left_parts.emplace_back(cat.compose(fk, f), weights[k]);
        const M& hk = pick(hom_ab);
        inner.emplace_back(hk, weights[k]);
        right_parts.emplace_back(cat.compose(g, hk), weights[k]);
      }
      const M lhs = cat.compose(alg.combine(outer), f);
      const M rhs = alg.combine(left_parts);
      cvx_left->check(cat.equal(lhs, rhs), [&] { return show(lhs) + " vs " + show(rhs); });
      const M lhs2 = cat.compose(g, alg.combine(inner));
      const M rhs2 = alg.combine(right_parts);
      cvx_right->check(cat.equal(lhs2, rhs2), [&] { return show(lhs2) + " vs " + show(rhs2); });
    }
  }
  return report;
}

/// The free model C_T over the object pool, homsets sampled `per_homset`
/// at a time from the shared engine.
template <BaseCategory Base>
CategoryDescription<EnrichedMorphism<Base>, typename Base::Object> free_model_description(
    MonadTag tag, Rng& rng, std::size_t per_homset = 4) {
  using Obj = typename Base::Object;
  CategoryDescription<EnrichedMorphism<Base>, Obj> cat;
  cat.name = std::string(Base::name) + "_" + std::string(to_string(tag));
  cat.objects = object_pool<Base>();
  cat.homset = [tag, &rng, per_homset](const Obj& a, const Obj& b) {
    std::vector<EnrichedMorphism<Base>> out;
    for (std::size_t i = 0; i < per_homset; ++i) out.push_back(random_enriched<Base>(tag, a, b, rng));
    return out;
  };
  cat.compose = [](const EnrichedMorphism<Base>& g, const EnrichedMorphism<Base>& f) {
    return enr_compose(g, f);
  };
  cat.show = [](const EnrichedMorphism<Base>& m) { return serialize(m); };
  return cat;
}

/// The free homset algebra of the model: ⊥ for Lift, unions for the
/// powersets, (sub)convex sums for the distributions.
template <BaseCategory Base>
HomsetAlgebra<EnrichedMorphism<Base>, typename Base::Object> free_model_algebra(MonadTag tag) {
  using Obj = typename Base::Object;
  using M = EnrichedMorphism<Base>;
  HomsetAlgebra<M, Obj> alg;
  alg.name = std::string(to_string(tag));
  if (has_bottom(tag)) {
    alg.bottom = [tag](const Obj& a, const Obj& b) { return enr_bottom<Base>(tag, a, b); };
  }
  switch (tag) {
    case MonadTag::Lift: alg.kind = AlgebraKind::Pointed; break;
    case MonadTag::PPlus: alg.kind = AlgebraKind::Semilattice; break;
    case MonadTag::POmega: alg.kind = AlgebraKind::PointedSemilattice; break;
    case MonadTag::Dist: alg.kind = AlgebraKind::Convex; break;
    case MonadTag::SubDist: alg.kind = AlgebraKind::Subconvex; break;
  }
  if (tag == MonadTag::PPlus || tag == MonadTag::POmega) {
    alg.join = [tag](const M& f, const M& g) {
      return enr_mix<Base>(tag, f.src(), f.tgt(), {{f, Rational(1)}, {g, Rational(1)}});
    };
  }
  if (is_quantitative(tag)) {
    alg.combine = [tag](const std::vector<std::pair<M, Rational>>& parts) {
      return enr_mix<Base>(tag, parts.front().first.src(), parts.front().first.tgt(), parts);
    };
  }
  return alg;
}

/// FinRel on sets of size 0..max_size with every relation in each homset.
CategoryDescription<RelMorphism, FinSet> finrel_description(std::size_t max_size = 2);
/// Union with the empty relation as bottom.
HomsetAlgebra<RelMorphism, FinSet> finrel_union_algebra();
/// Intersection posing as a join; composition does not distribute over it.
HomsetAlgebra<RelMorphism, FinSet> finrel_intersection_algebra();
/// FinMat on dimensions 0..2 (0 is the zero object) with sampled matrices.
CategoryDescription<MatMorphism, MatObj> finmat_description(std::uint64_t seed = 1);
/// Zero morphisms as the points of a Set•-enrichment.
HomsetAlgebra<MatMorphism, MatObj> finmat_zero_algebra();

}  // namespace mixcat
