#pragma once

// Free enrichments C_T of a base category for the five monads.
//
// C_T has the objects of C and homsets T(C(A, B)). Composition, tensor and
// dagger extend the base operations through the double strength, so for
// formal sums
//
//   (Σ_j q_j |g_j>) ∘ (Σ_i p_i |f_i>) = Σ_ij p_i q_j |g_j ∘ f_i>
//
// and the set and lift cases are the same formula with unit weights.
// Canonical collection of terms happens inside MonadElement, so equality of
// enriched morphisms is structural.

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "mixcat/base_category.hpp"
#include "mixcat/errors.hpp"
#include "mixcat/monads.hpp"

namespace mixcat {

template <BaseCategory Base>
class EnrichedMorphism {
 public:
  using Object = typename Base::Object;
  using BaseMorphism = Morphism<Base>;
  using Payload = MonadElement<BaseMorphism>;

  EnrichedMorphism(Object src, Object tgt, Payload payload)
      : src_(std::move(src)), tgt_(std::move(tgt)), payload_(std::move(payload)) {
    for (const auto& [f, w] : payload_.terms()) {
      if (!(f.src() == src_) || !(f.tgt() == tgt_)) {
        throw CompositionError("alternative " + f.key() + " does not live in " + src_.label +
                               " -> " + tgt_.label);
      }
    }
  }

  MonadTag tag() const { return payload_.tag(); }
  const Object& src() const { return src_; }
  const Object& tgt() const { return tgt_; }
  const Payload& payload() const { return payload_; }
  const auto& terms() const { return payload_.terms(); }
  /// ⊥, ∅ or the empty sum.
  bool is_bottom() const { return payload_.empty(); }

  friend bool operator==(const EnrichedMorphism&, const EnrichedMorphism&) = default;
  friend std::strong_ordering operator<=>(const EnrichedMorphism& a, const EnrichedMorphism& b) {
    if (auto c = a.src_ <=> b.src_; c != 0) return c;
    if (auto c = a.tgt_ <=> b.tgt_; c != 0) return c;
    return a.payload_ <=> b.payload_;
  }

 private:
  Object src_;
  Object tgt_;
  Payload payload_;
};

template <BaseCategory Base>
std::string describe(const Morphism<Base>& f) {
  return f.key();
}

/// "<tag> <src> -> <tgt> : w*key + w*key", "bottom" for an empty payload.
/// Weights are printed as num/den and terms are in canonical key order.
template <BaseCategory Base>
std::string serialize(const EnrichedMorphism<Base>& m) {
  std::string out = std::string(to_string(m.tag())) + " " + m.src().label + " -> " +
                    m.tgt().label + " : ";
  if (m.is_bottom()) return out + "bottom";
  bool first = true;
  for (const auto& [f, w] : m.terms()) {
    if (!first) out += " + ";
    first = false;
    out += w.str() + "*" + f.key();
  }
  return out;
}

template <BaseCategory Base>
std::string describe(const EnrichedMorphism<Base>& m) {
  return serialize(m);
}

/// Strict monoidal embedding C -> C_T: f ↦ η(f).
template <BaseCategory Base>
EnrichedMorphism<Base> lift_base(const Morphism<Base>& f, MonadTag tag) {
  return EnrichedMorphism<Base>(f.src(), f.tgt(), t_unit(tag, f));
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_bottom(MonadTag tag, const typename Base::Object& src,
                                  const typename Base::Object& tgt) {
  return EnrichedMorphism<Base>(src, tgt, MonadElement<Morphism<Base>>::bottom(tag));
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_id(const typename Base::Object& a, MonadTag tag) {
  return lift_base(identity<Base>(a), tag);
}

namespace detail {

template <BaseCategory Base>
void require_same_model(const EnrichedMorphism<Base>& a, const EnrichedMorphism<Base>& b) {
  if (a.tag() != b.tag()) {
    throw ModelError("cannot combine " + std::string(to_string(a.tag())) + " and " +
                     std::string(to_string(b.tag())) + " morphisms");
  }
}

}  // namespace detail

/// g ∘ f, extended bilinearly and collected.
template <BaseCategory Base>
EnrichedMorphism<Base> enr_compose(const EnrichedMorphism<Base>& g,
                                   const EnrichedMorphism<Base>& f) {
  detail::require_same_model(g, f);
  if (!(f.tgt() == g.src())) {
    throw CompositionError("cannot compose " + g.src().label + " -> " + g.tgt().label +
                           " after " + f.src().label + " -> " + f.tgt().label);
  }
  auto pairs = t_double_strength(g.payload(), f.payload());
  auto payload = t_map([](const auto& gf) { return compose(gf.first, gf.second); }, pairs);
  return EnrichedMorphism<Base>(f.src(), g.tgt(), std::move(payload));
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_tensor(const EnrichedMorphism<Base>& f,
                                  const EnrichedMorphism<Base>& g) {
  detail::require_same_model(f, g);
  auto pairs = t_double_strength(f.payload(), g.payload());
  auto payload = t_map([](const auto& fg) { return tensor(fg.first, fg.second); }, pairs);
  return EnrichedMorphism<Base>(tensor(f.src(), g.src()), tensor(f.tgt(), g.tgt()),
                                std::move(payload));
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_dagger(const EnrichedMorphism<Base>& f) {
  auto payload = t_map([](const Morphism<Base>& u) { return dagger(u); }, f.payload());
  return EnrichedMorphism<Base>(f.tgt(), f.src(), std::move(payload));
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_cup(const typename Base::Object& a, MonadTag tag) {
  return lift_base(cup<Base>(a), tag);
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_cap(const typename Base::Object& a, MonadTag tag) {
  return lift_base(cap<Base>(a), tag);
}

/// Every alternative reinterpreted between coherent objects.
template <BaseCategory Base>
EnrichedMorphism<Base> enr_relabel(const EnrichedMorphism<Base>& m,
                                   const typename Base::Object& src,
                                   const typename Base::Object& tgt) {
  if (!coherent(src, m.src()) || !coherent(tgt, m.tgt())) {
    throw CompositionError("no coherence isomorphism for " + m.src().label + " -> " +
                           m.tgt().label + " as " + src.label + " -> " + tgt.label);
  }
  auto payload =
      t_map([&](const Morphism<Base>& u) { return relabel(u, src, tgt); }, m.payload());
  return EnrichedMorphism<Base>(src, tgt, std::move(payload));
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_associator(const typename Base::Object& a,
                                      const typename Base::Object& b,
                                      const typename Base::Object& c, MonadTag tag) {
  return lift_base(associator<Base>(a, b, c), tag);
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_left_unitor(const typename Base::Object& a, MonadTag tag) {
  return lift_base(left_unitor<Base>(a), tag);
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_right_unitor(const typename Base::Object& a, MonadTag tag) {
  return lift_base(right_unitor<Base>(a), tag);
}

template <BaseCategory Base>
EnrichedMorphism<Base> enr_symmetry(const typename Base::Object& a,
                                    const typename Base::Object& b, MonadTag tag) {
  return lift_base(symmetry<Base>(a, b), tag);
}

template <BaseCategory Base>
using WeightedPart = std::pair<EnrichedMorphism<Base>, Rational>;

/// Homset algebra structure: the free algebra's structure map applied to a
/// combination of parts. Lift takes zero parts (⊥) or one; the powersets
/// take unions (weights only need to be positive); Dist and SubDist take
/// convex / subconvex combinations.
///
/// Throws ModelError / CompositionError for mismatched parts, WeightError
/// for invalid weights, NonEmptyError for an empty PPlus combination.
template <BaseCategory Base>
EnrichedMorphism<Base> enr_mix(MonadTag tag, const typename Base::Object& src,
                               const typename Base::Object& tgt,
                               std::vector<WeightedPart<Base>> parts) {
  for (const auto& [m, w] : parts) {
    if (m.tag() != tag) throw ModelError("part of model " + std::string(to_string(m.tag())) +
                                         " in a " + std::string(to_string(tag)) + " mix");
    if (!(m.src() == src) || !(m.tgt() == tgt)) {
      throw CompositionError("part " + m.src().label + " -> " + m.tgt().label + " in a mix of " +
                             src.label + " -> " + tgt.label);
    }
  }
  MonadElement<EnrichedMorphism<Base>> outer = [&] {
    try {
      return MonadElement<EnrichedMorphism<Base>>::from_terms(tag, std::move(parts));
    } catch (const StructureError&) {
      throw WeightError("a lift mix takes at most one part");
    }
  }();
  auto payload = t_mult(t_map([](const EnrichedMorphism<Base>& m) { return m.payload(); }, outer));
  return EnrichedMorphism<Base>(src, tgt, std::move(payload));
}

template <BaseCategory Base>
using RawTerm = std::pair<Morphism<Base>, Rational>;

/// Collected, sorted, zero-free normal form of an uncollected term list.
template <BaseCategory Base>
EnrichedMorphism<Base> canonicalize(MonadTag tag, const typename Base::Object& src,
                                    const typename Base::Object& tgt,
                                    std::vector<RawTerm<Base>> terms) {
  return EnrichedMorphism<Base>(src, tgt,
                                MonadElement<Morphism<Base>>::from_terms(tag, std::move(terms)));
}

template <BaseCategory Base>
EnrichedMorphism<Base> canonicalize(const EnrichedMorphism<Base>& m) {
  return canonicalize<Base>(m.tag(), m.src(), m.tgt(), m.terms());
}

template <BaseCategory Base>
bool enr_equal(const EnrichedMorphism<Base>& a, const EnrichedMorphism<Base>& b) {
  return canonicalize(a) == canonicalize(b);
}

}  // namespace mixcat
