#include "mixcat/base_category.hpp"

#include <set>

namespace mixcat {

FinSet make_finset(std::string label, std::vector<std::string> elements) {
  std::set<std::string> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) throw ShapeError("duplicate element '" + e + "' in set " + label);
  }
  std::vector<std::string> factors{label};
  return FinSet{std::move(label), std::move(elements), std::move(factors)};
}

FinSet finset_of_size(std::string label, std::size_t n) {
  std::vector<std::string> elements;
  elements.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elements.push_back(std::to_string(i));
  return make_finset(std::move(label), std::move(elements));
}

FinSet tensor(const FinSet& a, const FinSet& b) {
  FinSet out;
  out.label = "(" + a.label + "*" + b.label + ")";
  out.elements.reserve(a.size() * b.size());
  for (const auto& x : a.elements) {
    for (const auto& y : b.elements) out.elements.push_back("(" + x + "," + y + ")");
  }
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

FinSet Rel::unit() { return FinSet{"I", {"*"}, {}}; }

MatObj make_matobj(std::size_t dim) { return MatObj{std::to_string(dim), {dim}, dim}; }

MatObj tensor(const MatObj& a, const MatObj& b) {
  MatObj out;
  out.label = "(" + a.label + "*" + b.label + ")";
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  out.dim = a.dim * b.dim;
  return out;
}

MatObj Mat::unit() { return MatObj{"I", {}, 1}; }

RelMorphism relation(const FinSet& src, const FinSet& tgt,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  MatrixOf<Rel> m = MatrixOf<Rel>::Zero(static_cast<Eigen::Index>(tgt.size()),
                                        static_cast<Eigen::Index>(src.size()));
  for (const auto& [from, to] : pairs) {
    if (from >= src.size() || to >= tgt.size()) {
      throw ShapeError("pair (" + std::to_string(from) + "," + std::to_string(to) +
                       ") outside " + src.label + " x " + tgt.label);
    }
    m(static_cast<Eigen::Index>(to), static_cast<Eigen::Index>(from)) = true;
  }
  return RelMorphism(src, tgt, std::move(m));
}

std::vector<RelMorphism> all_relations(const FinSet& src, const FinSet& tgt) {
  const std::size_t cells = src.size() * tgt.size();
  if (cells > 20) throw BoundError("refusing to enumerate 2^" + std::to_string(cells) + " relations");
  const auto rows = static_cast<Eigen::Index>(tgt.size());
  const auto cols = static_cast<Eigen::Index>(src.size());
  std::vector<RelMorphism> out;
  out.reserve(std::size_t{1} << cells);
  for (std::size_t bits = 0; bits < (std::size_t{1} << cells); ++bits) {
    MatrixOf<Rel> m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        m(r, c) = ((bits >> static_cast<std::size_t>(r * cols + c)) & 1U) != 0;
      }
    }
    out.emplace_back(src, tgt, std::move(m));
  }
  return out;
}

RelMorphism rel_true() { return identity<Rel>(Rel::unit()); }
RelMorphism rel_false() { return zero<Rel>(Rel::unit(), Rel::unit()); }

}  // namespace mixcat
