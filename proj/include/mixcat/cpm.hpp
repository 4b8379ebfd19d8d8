#pragma once

// States of CPM(Rel) on small carriers.
//
// A relation R on A is positive when R = S†∘S for some S : A -> E. Each
// element e of E contributes the square A_e × A_e with A_e = S†(e), so R is
// positive exactly when it is the union of the squares it contains; the
// search below builds S from those squares. A state is pure when R itself is
// one square A × A (A may be empty). Mixing is relational union.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mixcat/base_category.hpp"
#include "mixcat/enrich.hpp"
#include "mixcat/law_report.hpp"

namespace mixcat {

/// S with r = S†∘S, its codomain listing the squares used, or nothing.
/// Throws ShapeError for a relation that is not an endorelation.
std::optional<RelMorphism> positive_factor(const RelMorphism& r);
bool is_positive(const RelMorphism& r);
bool is_pure(const RelMorphism& r);

/// All positive relations on the carrier, in bit order. Throws BoundError
/// above 4 elements.
std::vector<RelMorphism> enumerate_positive(const FinSet& carrier);

struct MixedToPure {
  RelMorphism pure;
  RelMorphism first;
  RelMorphism second;
};

struct PurePair {
  RelMorphism first;
  RelMorphism second;
  RelMorphism pure;
};

struct AnomalyReport {
  std::size_t size = 0;
  std::size_t positive = 0;
  std::size_t pure = 0;
  /// Pure P = M1 ∪ M2 with M1, M2 mixed; unordered pairs.
  std::vector<MixedToPure> pure_from_mixed;
  /// Distinct pure P1, P2 with P1 ∪ P2 pure; unordered pairs.
  std::vector<PurePair> pure_from_pure;

  bool both_found() const { return !pure_from_mixed.empty() && !pure_from_pure.empty(); }
  std::string to_text() const;
};

/// Throws BoundError above 4 elements.
AnomalyReport find_anomalies(std::size_t n);

/// Smallest carrier size up to `max_size` where both witness lists are
/// non-empty.
std::optional<std::size_t> smallest_anomaly_size(std::size_t max_size = 4);

/// The relation on A as a state I -> A ⊗ A (entry a*|A| + b).
RelMorphism relation_state(const RelMorphism& r);

struct ContrastReport {
  Rational p;
  EnrichedMorphism<Rel> mixture;
  /// Equal to the lift of a single base state.
  bool pure = false;
};

/// p|m1> + (1-p)|m2> in C_D over the lifted relation states.
ContrastReport contrast_with_dist(const RelMorphism& m1, const RelMorphism& m2, const Rational& p);

/// find_anomalies(n) as checks: both witness lists non-empty, sanity of the
/// enumeration (positive states symmetric, squares positive), and the C_D
/// contrast: mixing the lifted witness states with p in {1/4, 1/2, 3/4}
/// never yields the lift of the pure union and keeps both terms.
LawReport check_cpm_anomalies(std::size_t n);

}  // namespace mixcat
