#pragma once

// Pregroup types, a contraction parser, and the semantics of a reduction as
// a wiring of caps and identities.
//
// A simple type is a basic symbol with an adjoint order z: z = 1 is the
// right adjoint n^r, z = -1 the left adjoint n^l. Adjacent (b, z)(b, z+1)
// contract to the empty type, so n n^r -> 1 and n^l n -> 1.
//
// Both bases are self-dual, so every adjoint of b is sent to the object of b
// and each contraction becomes the cap of that object.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixcat/base_category.hpp"
#include "mixcat/enrich.hpp"
#include "mixcat/errors.hpp"
#include "mixcat/monads.hpp"
#include "mixcat/relate.hpp"

namespace mixcat {

struct SimpleType {
  std::string basic;
  int z = 0;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

using PregroupType = std::vector<SimpleType>;

/// Whitespace-separated tokens "b", "b^r", "b^l", "b^rr", "b^ll", ... where
/// each r adds one to the order and each l subtracts one. "." may replace "^".
/// Throws ParseError on a malformed token.
PregroupType parse_type(std::string_view text);
std::string to_string(const SimpleType& t);
std::string to_string(const PregroupType& t);
PregroupType concat(const std::vector<PregroupType>& types);

/// Contraction of the simple types at `position` and `position + 1` of the
/// sequence left by the earlier steps.
struct ContractionStep {
  std::size_t position = 0;
  SimpleType left;
  SimpleType right;

  friend bool operator==(const ContractionStep&, const ContractionStep&) = default;
};

struct Reduction {
  std::vector<ContractionStep> steps;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

bool contracts(const SimpleType& left, const SimpleType& right);

/// Replays the steps on `start`. Throws ParseError when a step does not
/// name a contractible adjacent pair.
PregroupType apply_reduction(const PregroupType& start, const Reduction& reduction);

/// Backtracking search over contractions, leftmost pair first. Returns the
/// first reduction of the concatenated types to `target`, if any.
std::optional<Reduction> parse(const std::vector<PregroupType>& types, const PregroupType& target);

/// Every reduction to `target`, in search order, up to `limit`.
std::vector<Reduction> all_reductions(const std::vector<PregroupType>& types,
                                      const PregroupType& target, std::size_t limit = 64);

template <BaseCategory Base>
using TypeAssignment = std::map<std::string, typename Base::Object>;

template <BaseCategory Base>
const typename Base::Object& object_of(const TypeAssignment<Base>& assignment,
                                       const SimpleType& t) {
  const auto it = assignment.find(t.basic);
  if (it == assignment.end()) throw AssignmentError("no object assigned to basic type '" + t.basic + "'");
  return it->second;
}

/// Left-nested tensor of the objects of the simple types.
template <BaseCategory Base>
typename Base::Object type_object(const TypeAssignment<Base>& assignment, const PregroupType& t) {
  std::vector<typename Base::Object> objects;
  objects.reserve(t.size());
  for (const auto& s : t) objects.push_back(object_of<Base>(assignment, s));
  return tensor_all<Base>(objects);
}

/// The arrow from the object of the concatenated types to the object of
/// the reduced type: one (id ⊗ cap ⊗ id) layer per contraction step.
template <BaseCategory Base>
Morphism<Base> semantics_wiring(const Reduction& reduction, const std::vector<PregroupType>& types,
                                const TypeAssignment<Base>& assignment) {
  using Obj = typename Base::Object;
  PregroupType current = concat(types);
  std::vector<Obj> objects;
  for (const auto& s : current) objects.push_back(object_of<Base>(assignment, s));
  const Obj start = tensor_all<Base>(objects);
  std::vector<Morphism<Base>> layers;
  for (const auto& step : reduction.steps) {
    if (step.position + 1 >= current.size() ||
        !contracts(current[step.position], current[step.position + 1])) {
      throw ParseError("step at position " + std::to_string(step.position) +
                       " does not contract " + to_string(current));
    }
    const std::vector<Obj> prefix(objects.begin(), objects.begin() + step.position);
    const std::vector<Obj> suffix(objects.begin() + step.position + 2, objects.end());
    const Obj& a = objects[step.position];
    const auto layer = tensor(tensor(identity<Base>(tensor_all<Base>(prefix)), cap<Base>(a)),
                              identity<Base>(tensor_all<Base>(suffix)));
    std::vector<Obj> next = prefix;
    next.insert(next.end(), suffix.begin(), suffix.end());
    layers.push_back(relabel(layer, tensor_all<Base>(objects), tensor_all<Base>(next)));
    objects = std::move(next);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(step.position),
                  current.begin() + static_cast<std::ptrdiff_t>(step.position) + 2);
  }
  if (layers.empty()) return identity<Base>(start);
  // Fold from the output side: each product then has the small codomain on the left.
  Morphism<Base> wiring = layers.back();
  for (auto it = layers.rbegin() + 1; it != layers.rend(); ++it) wiring = compose(wiring, *it);
  return wiring;
}

template <BaseCategory Base>
struct LexiconEntry {
  PregroupType type;
  /// State I -> object of `type`.
  EnrichedMorphism<Base> state;
};

template <BaseCategory Base>
struct Lexicon {
  MonadTag model = MonadTag::Dist;
  TypeAssignment<Base> objects;
  std::map<std::string, LexiconEntry<Base>> words;

  /// Throws LexiconError naming the word.
  const LexiconEntry<Base>& lookup(const std::string& word) const {
    const auto it = words.find(word);
    if (it == words.end()) throw LexiconError("unknown word '" + word + "'");
    return it->second;
  }
};

/// Applies f to every state of the lexicon.
template <BaseCategory Base, class F>
Lexicon<Base> map_states(const Lexicon<Base>& lexicon, MonadTag model, F&& f) {
  Lexicon<Base> out;
  out.model = model;
  out.objects = lexicon.objects;
  for (const auto& [word, entry] : lexicon.words) {
    out.words.emplace(word, LexiconEntry<Base>{entry.type, f(entry.state)});
  }
  return out;
}

namespace detail {

template <BaseCategory Base>
std::vector<PregroupType> word_types(const Lexicon<Base>& lexicon,
                                     const std::vector<std::string>& words) {
  std::vector<PregroupType> types;
  for (const auto& w : words) types.push_back(lexicon.lookup(w).type);
  return types;
}

template <BaseCategory Base>
Reduction require_parse(const std::vector<PregroupType>& types, const PregroupType& target) {
  auto reduction = parse(types, target);
  if (!reduction) {
    throw ParseError("no reduction of " + to_string(concat(types)) + " to " + to_string(target));
  }
  return *reduction;
}

}  // namespace detail

/// Meaning of the sentence in model `tag`: the lifted wiring composed with
/// the tensor of the word states. States are moved into `tag` along the
/// embeddings and supports when the lexicon uses another model.
///
/// Throws LexiconError for unknown words, ParseError when the sentence
/// does not reduce to `target`, ModelError when a state cannot be moved.
template <BaseCategory Base>
EnrichedMorphism<Base> sentence_meaning(const Lexicon<Base>& lexicon,
                                        const std::vector<std::string>& words,
                                        const PregroupType& target, MonadTag tag) {
  const auto types = detail::word_types(lexicon, words);
  const auto reduction = detail::require_parse<Base>(types, target);
  const auto wiring = semantics_wiring<Base>(reduction, types, lexicon.objects);
  auto states = enr_id<Base>(Base::unit(), tag);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto s = convert(lexicon.lookup(words[i]).state, tag);
    states = i == 0 ? s : enr_tensor(states, s);
  }
  states = enr_relabel(states, Base::unit(), wiring.src());
  return enr_compose(lift_base(wiring, tag), states);
}

/// The plain base-category meaning when every state has exactly one
/// alternative. Throws StructureError otherwise.
template <BaseCategory Base>
Morphism<Base> plain_meaning(const Lexicon<Base>& lexicon, const std::vector<std::string>& words,
                             const PregroupType& target) {
  const auto types = detail::word_types(lexicon, words);
  const auto reduction = detail::require_parse<Base>(types, target);
  const auto wiring = semantics_wiring<Base>(reduction, types, lexicon.objects);
  auto states = identity<Base>(Base::unit());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& s = lexicon.lookup(words[i]).state.payload().value();
    states = i == 0 ? s : tensor(states, s);
  }
  return compose(wiring, relabel(states, Base::unit(), wiring.src()));
}

}  // namespace mixcat
