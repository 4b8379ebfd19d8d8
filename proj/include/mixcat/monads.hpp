#pragma once

// The five informational monads on finite sets.
//
// One representation serves all five: a sorted, duplicate-free list of
// (element, weight) terms with strictly positive rational weights.
//
//   Lift     at most one term of weight 1; no terms is ⊥
//   PPlus    non-empty set, every weight 1
//   POmega   finite set, every weight 1
//   Dist     weights total exactly 1
//   SubDist  weights total at most 1; the empty sum is the bottom
//
// Unit, multiplication and functor action are then a single formula each:
// weights multiply down a nesting and add up when terms are collected.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "mixcat/describe.hpp"
#include "mixcat/errors.hpp"
#include "mixcat/law_report.hpp"
#include "mixcat/random.hpp"
#include "mixcat/rational.hpp"

namespace mixcat {

enum class MonadTag { Lift, PPlus, POmega, Dist, SubDist };

inline constexpr std::array<MonadTag, 5> kAllMonads{MonadTag::Lift, MonadTag::PPlus,
                                                    MonadTag::POmega, MonadTag::Dist,
                                                    MonadTag::SubDist};

/// "lift", "pplus", "pomega", "dist", "subdist".
std::string_view to_string(MonadTag tag);
/// Inverse of to_string; throws ModelError.
MonadTag parse_monad_tag(std::string_view name);

inline bool is_quantitative(MonadTag tag) {
  return tag == MonadTag::Dist || tag == MonadTag::SubDist;
}
inline bool is_enumerable(MonadTag tag) { return !is_quantitative(tag); }
/// Lift, POmega and SubDist have an empty element.
inline bool has_bottom(MonadTag tag) {
  return tag == MonadTag::Lift || tag == MonadTag::POmega || tag == MonadTag::SubDist;
}

template <class X>
class MonadElement {
 public:
  using value_type = X;
  using Term = std::pair<X, Rational>;

  /// Collects terms into canonical form and validates them against the tag.
  static MonadElement from_terms(MonadTag tag, std::vector<Term> terms) {
    for (const auto& t : terms) {
      if (t.second.is_negative()) throw WeightError("negative weight " + t.second.str());
    }
    std::erase_if(terms, [](const Term& t) { return t.second.is_zero(); });
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().first == t.first) {
        merged.back().second += t.second;
      } else {
        merged.push_back(std::move(t));
      }
    }
    switch (tag) {
      case MonadTag::Lift:
        if (merged.size() > 1) throw StructureError("lift element with several alternatives");
        [[fallthrough]];
      case MonadTag::PPlus:
      case MonadTag::POmega:
        for (auto& t : merged) t.second = Rational(1);
        if (tag == MonadTag::PPlus && merged.empty()) {
          throw NonEmptyError("non-empty powerset element without alternatives");
        }
        break;
      case MonadTag::Dist:
      case MonadTag::SubDist: {
        Rational total;
        for (const auto& t : merged) total += t.second;
        if (tag == MonadTag::Dist && total != Rational(1)) {
          throw WeightError("distribution weights total " + total.str() + ", expected 1/1");
        }
        if (tag == MonadTag::SubDist && total > Rational(1)) {
          throw WeightError("subdistribution weights total " + total.str() + " > 1");
        }
        break;
      }
    }
    return MonadElement(tag, std::move(merged));
  }

  static MonadElement unit(MonadTag tag, X x) {
    std::vector<Term> terms;
    terms.emplace_back(std::move(x), Rational(1));
    return MonadElement(tag, std::move(terms));
  }

  /// ⊥, ∅ or the empty sum. Throws StructureError for PPlus and Dist.
  static MonadElement bottom(MonadTag tag) {
    if (!has_bottom(tag)) {
      throw StructureError(std::string(to_string(tag)) + " has no empty element");
    }
    return MonadElement(tag, {});
  }

  static MonadElement from_set(MonadTag tag, std::vector<X> xs) {
    std::vector<Term> terms;
    terms.reserve(xs.size());
    for (auto& x : xs) terms.emplace_back(std::move(x), Rational(1));
    return from_terms(tag, std::move(terms));
  }

  MonadTag tag() const { return tag_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::vector<X> support() const {
    std::vector<X> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.first);
    return out;
  }

  /// The only element of a non-bottom Lift value (or of any singleton).
  const X& value() const {
    if (terms_.size() != 1) throw StructureError("value() on an element with " +
                                                 std::to_string(terms_.size()) + " terms");
    return terms_.front().first;
  }

  Rational weight(const X& x) const {
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                                     [](const Term& t, const X& v) { return t.first < v; });
    return it != terms_.end() && it->first == x ? it->second : Rational(0);
  }

  Rational total_weight() const {
    Rational total;
    for (const auto& t : terms_) total += t.second;
    return total;
  }

  friend bool operator==(const MonadElement&, const MonadElement&) = default;
  friend std::strong_ordering operator<=>(const MonadElement& a, const MonadElement& b) {
    if (a.tag_ != b.tag_) return a.tag_ <=> b.tag_;
    const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.terms_[i].first < b.terms_[i].first) return std::strong_ordering::less;
      if (b.terms_[i].first < a.terms_[i].first) return std::strong_ordering::greater;
      if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

 private:
  MonadElement(MonadTag tag, std::vector<Term> terms) : tag_(tag), terms_(std::move(terms)) {}

  MonadTag tag_ = MonadTag::POmega;
  std::vector<Term> terms_;
};

template <class X>
std::string describe(const MonadElement<X>& t) {
  const auto& terms = t.terms();
  switch (t.tag()) {
    case MonadTag::Lift:
      return terms.empty() ? std::string("bottom") : describe(terms.front().first);
    case MonadTag::PPlus:
    case MonadTag::POmega: {
      std::string out = "{";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) out += ", ";
        out += describe(terms[i].first);
      }
      return out + "}";
    }
    case MonadTag::Dist:
    case MonadTag::SubDist: {
      if (terms.empty()) return "0";
      std::string out;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i != 0) out += " + ";
        out += terms[i].second.str() + "|" + describe(terms[i].first) + ">";
      }
      return out;
    }
  }
  return {};
}

template <class X>
MonadElement<X> t_unit(MonadTag tag, X x) {
  return MonadElement<X>::unit(tag, std::move(x));
}

/// Functor action: pushes terms forward along f and collects them.
template <class F, class X>
auto t_map(F&& f, const MonadElement<X>& t) {
  using Y = std::decay_t<std::invoke_result_t<F&, const X&>>;
  std::vector<typename MonadElement<Y>::Term> out;
  out.reserve(t.size());
  for (const auto& [x, w] : t.terms()) out.emplace_back(std::invoke(f, x), w);
  return MonadElement<Y>::from_terms(t.tag(), std::move(out));
}

/// Functor action along a finite function given as a table. Throws
/// DomainError for elements outside the table.
template <class X, class Y>
MonadElement<Y> t_map(const std::map<X, Y>& table, const MonadElement<X>& t) {
  return t_map(
      [&table](const X& x) -> const Y& {
        const auto it = table.find(x);
        if (it == table.end()) throw DomainError("element " + describe(x) + " outside the domain");
        return it->second;
      },
      t);
}

/// Multiplication: union of sets, or the flattened weighted sum.
template <class X>
MonadElement<X> t_mult(const MonadElement<MonadElement<X>>& tt) {
  std::vector<typename MonadElement<X>::Term> out;
  for (const auto& [inner, w] : tt.terms()) {
    if (inner.tag() != tt.tag()) {
      throw StructureError(std::string(to_string(inner.tag())) + " element nested inside " +
                           std::string(to_string(tt.tag())));
    }
    for (const auto& [x, v] : inner.terms()) out.emplace_back(x, w * v);
  }
  return MonadElement<X>::from_terms(tt.tag(), std::move(out));
}

/// Monad operations for one tag, in the shape the generic checkers expect
/// (unit, mult, map). Test code supplies other monads with the same shape.
struct FiniteMonad {
  MonadTag tag = MonadTag::POmega;

  template <class X>
  MonadElement<X> unit(const X& x) const {
    return t_unit(tag, x);
  }
  template <class X>
  MonadElement<X> mult(const MonadElement<MonadElement<X>>& tt) const {
    return t_mult(tt);
  }
  template <class F, class X>
  auto map(F&& f, const MonadElement<X>& t) const {
    return t_map(std::forward<F>(f), t);
  }
};

// Strength machinery, generic over the monad operations.

/// st(x, u) = T(y ↦ (x, y))(u)
template <class M, class X, class TY>
auto strength(const M& m, const X& x, const TY& u) {
  return m.map([&x](const auto& y) { return std::pair(x, y); }, u);
}

/// cst(t, y) = T(x ↦ (x, y))(t)
template <class M, class TX, class Y>
auto costrength(const M& m, const TX& t, const Y& y) {
  return m.map([&y](const auto& x) { return std::pair(x, y); }, t);
}

/// μ ∘ T(cst) ∘ st
template <class M, class TX, class TY>
auto double_strength(const M& m, const TX& t, const TY& u) {
  const auto outer = strength(m, t, u);
  return m.mult(m.map([&m](const auto& pr) { return costrength(m, pr.first, pr.second); }, outer));
}

/// μ ∘ T(st) ∘ cst; equals double_strength exactly when the monad commutes.
template <class M, class TX, class TY>
auto double_strength_swapped(const M& m, const TX& t, const TY& u) {
  const auto outer = costrength(m, t, u);
  return m.mult(m.map([&m](const auto& pr) { return strength(m, pr.first, pr.second); }, outer));
}

template <class X, class TY>
auto t_strength(const X& x, const TY& u) {
  return strength(FiniteMonad{u.tag()}, x, u);
}
template <class TX, class Y>
auto t_costrength(const TX& t, const Y& y) {
  return costrength(FiniteMonad{t.tag()}, t, y);
}
template <class X, class Y>
auto t_double_strength(const MonadElement<X>& t, const MonadElement<Y>& u) {
  if (t.tag() != u.tag()) throw ModelError("double strength across different monads");
  return double_strength(FiniteMonad{t.tag()}, t, u);
}

// Enumeration and sampling of T X for a finite carrier.

/// All of T X. Only for Lift, PPlus, POmega; carriers up to 20 elements.
template <class X>
std::vector<MonadElement<X>> enumerate_elements(MonadTag tag, const std::vector<X>& carrier) {
  if (!is_enumerable(tag)) {
    throw BoundError(std::string(to_string(tag)) + " elements cannot be enumerated");
  }
  std::vector<MonadElement<X>> out;
  if (tag == MonadTag::Lift) {
    out.push_back(MonadElement<X>::bottom(tag));
    for (const auto& x : carrier) out.push_back(t_unit(tag, x));
    return out;
  }
  if (carrier.size() > 20) throw BoundError("powerset of more than 20 elements");
  const std::size_t count = std::size_t{1} << carrier.size();
  for (std::size_t bits = tag == MonadTag::PPlus ? 1 : 0; bits < count; ++bits) {
    std::vector<X> xs;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if ((bits >> i) & 1U) xs.push_back(carrier[i]);
    }
    out.push_back(MonadElement<X>::from_set(tag, std::move(xs)));
  }
  return out;
}

/// Random element with at most three alternatives.
template <class X>
MonadElement<X> random_element(MonadTag tag, const std::vector<X>& carrier, Rng& rng) {
  const std::size_t n = carrier.size();
  auto choose = [&](std::size_t k) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[uniform_index(rng, i, n - 1)]);
    idx.resize(k);
    return idx;
  };
  const std::size_t cap = std::min<std::size_t>(n, 3);
  switch (tag) {
    case MonadTag::Lift:
      if (n == 0 || coin(rng, 4)) return MonadElement<X>::bottom(tag);
      return t_unit(tag, carrier[uniform_index(rng, 0, n - 1)]);
    case MonadTag::PPlus:
    case MonadTag::POmega: {
      const std::size_t lo = tag == MonadTag::PPlus ? 1 : 0;
      if (n < lo) throw NonEmptyError("cannot sample a non-empty subset of an empty carrier");
      std::vector<X> xs;
      for (auto i : choose(uniform_index(rng, lo, cap))) xs.push_back(carrier[i]);
      return MonadElement<X>::from_set(tag, std::move(xs));
    }
    case MonadTag::Dist:
    case MonadTag::SubDist: {
      const std::size_t lo = tag == MonadTag::Dist ? 1 : 0;
      if (n < lo) throw NonEmptyError("cannot sample a distribution on an empty carrier");
      const auto idx = choose(uniform_index(rng, lo, cap));
      const auto weights = random_weights(rng, idx.size(), tag == MonadTag::SubDist);
      std::vector<typename MonadElement<X>::Term> terms;
      for (std::size_t i = 0; i < idx.size(); ++i) terms.emplace_back(carrier[idx[i]], weights[i]);
      return MonadElement<X>::from_terms(tag, std::move(terms));
    }
  }
  throw StructureError("unknown monad tag");
}

template <class X>
std::vector<MonadElement<X>> random_elements(MonadTag tag, const std::vector<X>& carrier,
                                             std::size_t count, Rng& rng) {
  std::vector<MonadElement<X>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_element(tag, carrier, rng));
  return out;
}

/// T X when enumerable and small, otherwise `count` random elements.
template <class X>
std::vector<MonadElement<X>> sample_elements(MonadTag tag, const std::vector<X>& carrier,
                                             std::size_t count, Rng& rng,
                                             std::size_t exhaustive_limit = 256) {
  if (is_enumerable(tag) && (tag == MonadTag::Lift || carrier.size() <= 20) &&
      (tag == MonadTag::Lift || (std::size_t{1} << carrier.size()) <= exhaustive_limit)) {
    return enumerate_elements(tag, carrier);
  }
  return random_elements(tag, carrier, count, rng);
}

/// Hand-picked corner cases: point masses, uniform pairs, the empty element.
template <class X>
std::vector<MonadElement<X>> corner_elements(MonadTag tag, const std::vector<X>& carrier) {
  std::vector<MonadElement<X>> out;
  if (has_bottom(tag)) out.push_back(MonadElement<X>::bottom(tag));
  for (const auto& x : carrier) out.push_back(t_unit(tag, x));
  if (carrier.size() >= 2 && tag != MonadTag::Lift) {
    const Rational half(1, 2);
    out.push_back(MonadElement<X>::from_terms(tag, {{carrier[0], half}, {carrier[1], half}}));
    if (tag == MonadTag::SubDist) {
      out.push_back(MonadElement<X>::from_terms(tag, {{carrier[0], Rational(1, 3)}}));
    }
  }
  return out;
}

// Law checking.

/// Both unit laws on `tx` and associativity on `ttt`, using the operations of m.
template <class M, class TX, class TTTX>
void check_monad_laws(const M& m, LawReport& report, const std::string& suite,
                      const std::vector<TX>& tx, const std::vector<TTTX>& ttt) {
  auto& left = report.entry(suite, "left unit: mu . eta_T = id");
  auto& right = report.entry(suite, "right unit: mu . T(eta) = id");
  for (const auto& t : tx) {
    const auto via_unit = m.mult(m.unit(t));
    left.check(via_unit == t, [&] { return describe(t) + " -> " + describe(via_unit); });
    const auto via_map = m.mult(m.map([&m](const auto& x) { return m.unit(x); }, t));
    right.check(via_map == t, [&] { return describe(t) + " -> " + describe(via_map); });
  }
  auto& assoc = report.entry(suite, "associativity: mu . mu_T = mu . T(mu)");
  for (const auto& t : ttt) {
    const auto outer_first = m.mult(m.mult(t));
    const auto inner_first = m.mult(m.map([&m](const auto& tt) { return m.mult(tt); }, t));
    assoc.check(outer_first == inner_first, [&] {
      return describe(t) + ": " + describe(outer_first) + " vs " + describe(inner_first);
    });
  }
}

std::vector<int> int_carrier(std::size_t n, int offset = 0);

/// Unit and associativity laws for one tag on carriers of size 0..max_carrier.
/// Lift, PPlus and POmega are checked exhaustively over T X and T T X (and
/// over all of T T T X while it has at most 2^16 elements, otherwise over
/// its elements with at most two members plus `samples` random ones).
/// Dist and SubDist use corner cases plus `samples` seeded random elements.
LawReport check_monad_laws(MonadTag tag, std::size_t max_carrier, std::uint64_t seed,
                           std::size_t samples);

struct CommutativityResult {
  bool holds = true;
  std::size_t instances = 0;
  std::string witness;
};

/// Compares both double strength composites on every pair from ts × us.
template <class M, class TX, class TY>
CommutativityResult check_commutativity(const M& m, const std::vector<TX>& ts,
                                        const std::vector<TY>& us) {
  CommutativityResult result;
  for (const auto& t : ts) {
    for (const auto& u : us) {
      ++result.instances;
      const auto lhs = double_strength(m, t, u);
      const auto rhs = double_strength_swapped(m, t, u);
      if (lhs != rhs && result.holds) {
        result.holds = false;
        result.witness = "t=" + describe(t) + " u=" + describe(u) + ": " + describe(lhs) +
                         " vs " + describe(rhs);
      }
    }
  }
  return result;
}

/// Carriers of size 1..max_carrier each side; exhaustive where enumerable.
CommutativityResult check_commutativity(MonadTag tag, std::size_t max_carrier,
                                        std::uint64_t seed, std::size_t samples);

/// Result of inspecting T(1).
struct TerminalInspection {
  bool affine = false;
  /// nullopt when T(1) is infinite.
  std::optional<std::size_t> size;
  std::vector<std::string> elements;
};

TerminalInspection inspect_terminal(MonadTag tag);
inline bool is_affine(MonadTag tag) { return inspect_terminal(tag).affine; }

/// dst ∘ δ = T δ on every (sampled) element of T X.
LawResult check_relevant(MonadTag tag, std::size_t carrier_size, std::uint64_t seed = 1,
                         std::size_t samples = 100);
inline bool is_relevant(MonadTag tag, std::size_t carrier_size) {
  return check_relevant(tag, carrier_size).passed();
}

/// Confusion between x and itself is x: collection collapses repeated terms.
LawResult check_idempotence(MonadTag tag, std::size_t carrier_size);

// Eilenberg-Moore algebras.

template <class A>
struct EMAlgebraSpec {
  std::vector<A> carrier;
  std::function<A(const MonadElement<A>&)> structure;
};

/// Structure map backed by an explicit table; missing entries throw DomainError.
template <class A>
std::function<A(const MonadElement<A>&)> structure_table(std::map<MonadElement<A>, A> table) {
  return [table = std::move(table)](const MonadElement<A>& t) {
    const auto it = table.find(t);
    if (it == table.end()) throw DomainError("structure map undefined on " + describe(t));
    return it->second;
  };
}

/// POmega-algebra of a join semilattice: finite joins, ∅ ↦ bottom.
template <class A>
EMAlgebraSpec<A> join_semilattice_algebra(std::vector<A> carrier,
                                          std::function<A(const A&, const A&)> join, A bottom) {
  return {std::move(carrier), [join = std::move(join), bottom](const MonadElement<A>& t) {
            A acc = bottom;
            for (const auto& [a, w] : t.terms()) acc = join(acc, a);
            return acc;
          }};
}

/// a ∘ η = 1 on the carrier and a ∘ μ = a ∘ T a on nested elements: all of
/// T T A when T A has at most 8 elements, otherwise `samples` seeded ones.
template <class A>
LawReport check_em_algebra(const EMAlgebraSpec<A>& spec, MonadTag tag, std::uint64_t seed = 1,
                           std::size_t samples = 100) {
  Rng rng(seed);
  LawReport report;
  const std::string suite = "em-algebra/" + std::string(to_string(tag));
  auto& unit_law = report.add(suite, "a . eta = id");
  for (const auto& a : spec.carrier) {
    const A back = spec.structure(t_unit(tag, a));
    unit_law.check(back == a, [&] { return describe(a) + " -> " + describe(back); });
  }
  auto& mult_law = report.add(suite, "a . mu = a . T(a)");
  std::vector<MonadElement<A>> level1;
  bool exhaustive = false;
  if (is_enumerable(tag) && spec.carrier.size() <= 3) {
    level1 = enumerate_elements(tag, spec.carrier);
    exhaustive = level1.size() <= 8;
  }
  if (!exhaustive) {
    level1 = corner_elements(tag, spec.carrier);
    const auto extra = random_elements(tag, spec.carrier, samples, rng);
    level1.insert(level1.end(), extra.begin(), extra.end());
  }
  const auto level2 = exhaustive ? enumerate_elements(tag, level1)
                                 : random_elements(tag, level1, samples, rng);
  for (const auto& tt : level2) {
    const A flat = spec.structure(t_mult(tt));
    const A staged = spec.structure(t_map(spec.structure, tt));
    mult_law.check(flat == staged, [&] {
      return describe(tt) + ": " + describe(flat) + " vs " + describe(staged);
    });
  }
  return report;
}

// Composite-monad isomorphisms: Pω X ≅ (P⁺ X)_⊥ and S X ≅ D(X_⊥).

template <class X>
using LiftedPPlus = MonadElement<MonadElement<X>>;

template <class X>
LiftedPPlus<X> pomega_to_lifted(const MonadElement<X>& s) {
  if (s.tag() != MonadTag::POmega) throw ModelError("expected a pomega element");
  if (s.empty()) return LiftedPPlus<X>::bottom(MonadTag::Lift);
  return t_unit(MonadTag::Lift, MonadElement<X>::from_set(MonadTag::PPlus, s.support()));
}

template <class X>
MonadElement<X> lifted_to_pomega(const LiftedPPlus<X>& l) {
  if (l.tag() != MonadTag::Lift) throw ModelError("expected a lifted pplus element");
  if (l.empty()) return MonadElement<X>::bottom(MonadTag::POmega);
  return MonadElement<X>::from_set(MonadTag::POmega, l.value().support());
}

/// Unit of the composite (P⁺ -)_⊥.
template <class X>
LiftedPPlus<X> lifted_pplus_unit(const X& x) {
  return t_unit(MonadTag::Lift, t_unit(MonadTag::PPlus, x));
}

/// Multiplication of the composite (P⁺ -)_⊥: an outer ⊥ stays ⊥; inside a
/// set of alternatives, ⊥ alternatives are dropped and the rest are
/// unioned, leaving ⊥ only if nothing remains.
template <class X>
LiftedPPlus<X> lifted_pplus_mult(const MonadElement<MonadElement<LiftedPPlus<X>>>& ll) {
  if (ll.empty()) return LiftedPPlus<X>::bottom(MonadTag::Lift);
  std::vector<X> alternatives;
  for (const auto& [inner, w] : ll.value().terms()) {
    if (inner.empty()) continue;
    for (const auto& x : inner.value().support()) alternatives.push_back(x);
  }
  if (alternatives.empty()) return LiftedPPlus<X>::bottom(MonadTag::Lift);
  return t_unit(MonadTag::Lift, MonadElement<X>::from_set(MonadTag::PPlus, std::move(alternatives)));
}

/// Missing mass becomes the weight of ⊥ (nullopt).
template <class X>
MonadElement<std::optional<X>> subdist_to_dist(const MonadElement<X>& s) {
  if (s.tag() != MonadTag::SubDist) throw ModelError("expected a subdist element");
  std::vector<typename MonadElement<std::optional<X>>::Term> terms;
  for (const auto& [x, w] : s.terms()) terms.emplace_back(std::optional<X>(x), w);
  terms.emplace_back(std::nullopt, Rational(1) - s.total_weight());
  return MonadElement<std::optional<X>>::from_terms(MonadTag::Dist, std::move(terms));
}

template <class X>
MonadElement<X> dist_to_subdist(const MonadElement<std::optional<X>>& d) {
  if (d.tag() != MonadTag::Dist) throw ModelError("expected a dist element over X_bottom");
  std::vector<typename MonadElement<X>::Term> terms;
  for (const auto& [x, w] : d.terms()) {
    if (x) terms.emplace_back(*x, w);
  }
  return MonadElement<X>::from_terms(MonadTag::SubDist, std::move(terms));
}

template <class X>
MonadElement<std::optional<X>> dist_lift_unit(const X& x) {
  return t_unit(MonadTag::Dist, std::optional<X>(x));
}

/// Multiplication of the composite D((-)_⊥): mass on an outer ⊥ stays on ⊥,
/// the rest is flattened as in D.
template <class X>
MonadElement<std::optional<X>> dist_lift_mult(
    const MonadElement<std::optional<MonadElement<std::optional<X>>>>& dd) {
  std::vector<typename MonadElement<std::optional<X>>::Term> terms;
  for (const auto& [inner, w] : dd.terms()) {
    if (!inner) {
      terms.emplace_back(std::nullopt, w);
      continue;
    }
    for (const auto& [x, v] : inner->terms()) terms.emplace_back(x, w * v);
  }
  return MonadElement<std::optional<X>>::from_terms(MonadTag::Dist, std::move(terms));
}

/// Bijection, unit and multiplication checks for Pω ≅ (P⁺ -)_⊥ on carriers
/// of size 0..max_carrier, exhaustive over Pω X and Pω Pω X.
LawReport check_pomega_iso(std::size_t max_carrier);

/// The same for S ≅ D((-)_⊥) on corner cases plus `samples` seeded elements
/// per carrier size 1..max_carrier.
LawReport check_subdist_iso(std::size_t max_carrier, std::uint64_t seed, std::size_t samples);

}  // namespace mixcat
