#include "mixcat/cpm.hpp"

#include <sstream>

namespace mixcat {

namespace {

void require_square(const RelMorphism& r) {
  if (!(r.src() == r.tgt())) {
    throw ShapeError("CPM state needs an endorelation, got " + r.src().label + " -> " + r.tgt().label);
  }
}

bool square_inside(const RelMorphism& r, std::size_t subset) {
  const auto n = static_cast<Eigen::Index>(r.src().size());
  for (Eigen::Index a = 0; a < n; ++a) {
    if (((subset >> a) & 1U) == 0) continue;
    for (Eigen::Index b = 0; b < n; ++b) {
      if (((subset >> b) & 1U) != 0 && !r.matrix()(b, a)) return false;
    }
  }
  return true;
}

std::string show(const RelMorphism& r) {
  const auto& el = r.src().elements;
  std::string out = "{";
  bool first = true;
  for (Eigen::Index a = 0; a < r.matrix().cols(); ++a) {
    for (Eigen::Index b = 0; b < r.matrix().rows(); ++b) {
      if (!r.matrix()(b, a)) continue;
      if (!first) out += ", ";
      first = false;
      out += "(" + el[static_cast<std::size_t>(a)] + "," + el[static_cast<std::size_t>(b)] + ")";
    }
  }
  return out + "}";
}

RelMorphism join(const RelMorphism& a, const RelMorphism& b) {
  return RelMorphism(a.src(), a.tgt(), MatrixOf<Rel>(a.matrix().array() || b.matrix().array()));
}

}  // namespace

std::optional<RelMorphism> positive_factor(const RelMorphism& r) {
  require_square(r);
  const std::size_t n = r.src().size();
  if (n > 16) throw BoundError("positivity search is bounded to 16 elements");
  std::vector<std::size_t> squares;
  MatrixOf<Rel> covered = MatrixOf<Rel>::Zero(r.matrix().rows(), r.matrix().cols());
  for (std::size_t subset = 1; subset < (std::size_t{1} << n); ++subset) {
    if (!square_inside(r, subset)) continue;
    squares.push_back(subset);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (((subset >> a) & 1U) && ((subset >> b) & 1U)) {
          covered(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = true;
        }
      }
    }
  }
  if (covered != r.matrix()) return std::nullopt;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < squares.size(); ++i) labels.push_back("e" + std::to_string(i));
  const FinSet aux = make_finset("E", labels);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      if ((squares[i] >> a) & 1U) pairs.emplace_back(a, i);
    }
  }
  return relation(r.src(), aux, pairs);
}

bool is_positive(const RelMorphism& r) { return positive_factor(r).has_value(); }

bool is_pure(const RelMorphism& r) {
  require_square(r);
  const auto n = r.matrix().rows();
  // The candidate square is the set of elements related to themselves.
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      if (r.matrix()(b, a) != (r.matrix()(a, a) && r.matrix()(b, b))) return false;
    }
  }
  return true;
}

std::vector<RelMorphism> enumerate_positive(const FinSet& carrier) {
  if (carrier.size() > 4) {
    throw BoundError("CPM enumeration is bounded to 4 elements, got " + std::to_string(carrier.size()));
  }
  std::vector<RelMorphism> out;
  for (auto& r : all_relations(carrier, carrier)) {
    if (is_positive(r)) out.push_back(std::move(r));
  }
  return out;
}

AnomalyReport find_anomalies(std::size_t n) {
  if (n > 4) throw BoundError("CPM anomaly search is bounded to 4 elements, got " + std::to_string(n));
  static const char* const kNames[] = {"a", "b", "c", "d"};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(kNames[i]);
  const FinSet carrier = make_finset("A", labels);
  const auto positive = enumerate_positive(carrier);
  std::vector<RelMorphism> pure, mixed;
  for (const auto& r : positive) (is_pure(r) ? pure : mixed).push_back(r);

  AnomalyReport report;
  report.size = n;
  report.positive = positive.size();
  report.pure = pure.size();
  for (std::size_t i = 0; i < mixed.size(); ++i) {
    for (std::size_t j = i; j < mixed.size(); ++j) {
      auto u = join(mixed[i], mixed[j]);
      if (is_pure(u)) report.pure_from_mixed.push_back({std::move(u), mixed[i], mixed[j]});
    }
  }
  for (std::size_t i = 0; i < pure.size(); ++i) {
    for (std::size_t j = i + 1; j < pure.size(); ++j) {
      auto u = join(pure[i], pure[j]);
      if (is_pure(u)) report.pure_from_pure.push_back({pure[i], pure[j], std::move(u)});
    }
  }
  return report;
}

std::optional<std::size_t> smallest_anomaly_size(std::size_t max_size) {
  for (std::size_t n = 0; n <= max_size; ++n) {
    if (find_anomalies(n).both_found()) return n;
  }
  return std::nullopt;
}

std::string AnomalyReport::to_text() const {
  std::ostringstream os;
  os << "carrier size " << size << ": " << positive << " positive states, " << pure << " pure\n";
  os << "pure state as a mixture of two mixed states: " << pure_from_mixed.size() << " witnesses\n";
  for (const auto& w : pure_from_mixed) {
    os << "    " << show(w.first) << " u " << show(w.second) << " = " << show(w.pure) << "\n";
  }
  os << "pure state as a mixture of two distinct pure states: " << pure_from_pure.size()
     << " witnesses\n";
  for (const auto& w : pure_from_pure) {
    os << "    " << show(w.first) << " u " << show(w.second) << " = " << show(w.pure) << "\n";
  }
  return os.str();
}

RelMorphism relation_state(const RelMorphism& r) {
  require_square(r);
  const auto n = r.matrix().rows();
  MatrixOf<Rel> v(n * n, 1);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) v(a * n + b, 0) = r.matrix()(b, a);
  }
  return RelMorphism(Rel::unit(), tensor(r.src(), r.src()), std::move(v));
}

ContrastReport contrast_with_dist(const RelMorphism& m1, const RelMorphism& m2, const Rational& p) {
  if (p.is_negative() || p > Rational(1)) throw WeightError("mixing weight " + p.str() + " outside [0, 1]");
  const auto s1 = relation_state(m1);
  const auto s2 = relation_state(m2);
  const auto mixture = enr_mix<Rel>(MonadTag::Dist, s1.src(), s1.tgt(),
                                    {{lift_base(s1, MonadTag::Dist), p},
                                     {lift_base(s2, MonadTag::Dist), Rational(1) - p}});
  return ContrastReport{p, mixture, mixture.terms().size() == 1};
}

LawReport check_cpm_anomalies(std::size_t n) {
  const auto found = find_anomalies(n);
  LawReport report;
  report.title = "CPM(Rel) anomalies on " + std::to_string(n) + " elements";
  const std::string suite = "cpm/" + std::to_string(n);
  auto& mixed = report.add(suite, "a pure state is the union of two mixed states");
  mixed.record(!found.pure_from_mixed.empty(), "no witness among " + std::to_string(found.positive) +
                                                   " positive states");
  auto& pures = report.add(suite, "two distinct pure states have a pure union");
  pures.record(!found.pure_from_pure.empty(), "no witness among " + std::to_string(found.pure) +
                                                  " pure states");

  static const char* const kNames[] = {"a", "b", "c", "d"};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(kNames[i]);
  const FinSet carrier = make_finset("A", labels);
  auto& symmetric = report.add(suite, "positive states are symmetric");
  for (const auto& r : enumerate_positive(carrier)) {
    symmetric.check(r.matrix() == r.matrix().transpose(), [&] { return show(r); });
  }
  auto& squares = report.add(suite, "every square A x A is positive");
  for (std::size_t subset = 0; subset < (std::size_t{1} << n); ++subset) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (((subset >> a) & 1U) && ((subset >> b) & 1U)) pairs.emplace_back(a, b);
      }
    }
    const auto r = relation(carrier, carrier, pairs);
    squares.check(is_pure(r) && is_positive(r), [&] { return show(r); });
  }

  auto& contrast = report.add(suite, "dist mixtures of the witness states stay mixed");
  auto check_contrast = [&](const RelMorphism& m1, const RelMorphism& m2, const RelMorphism& pure) {
    const auto lifted = lift_base(relation_state(pure), MonadTag::Dist);
    for (const auto& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      const auto c = contrast_with_dist(m1, m2, p);
      const bool distinct = !(m1 == m2);
      contrast.check(!(c.mixture == lifted) && (!distinct || c.mixture.terms().size() == 2),
                     [&] { return show(m1) + " and " + show(m2) + " at " + p.str(); });
    }
  };
  for (const auto& w : found.pure_from_mixed) check_contrast(w.first, w.second, w.pure);
  for (const auto& w : found.pure_from_pure) check_contrast(w.first, w.second, w.pure);
  return report;
}

}  // namespace mixcat
