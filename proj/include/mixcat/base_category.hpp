#pragma once

// Finite dagger compact closed base categories.
//
//   Rel : finite sets and binary relations, arrows are boolean matrices
//   Mat : finite dimensions and exact rational matrices
//
// A matrix of an arrow A -> B is indexed (target element, source element).
// Tensor objects enumerate pairs lexicographically, which makes every
// associator and unitor an identity matrix between differently bracketed
// objects ("coherent" objects: same flattened factor list).

#include <compare>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/KroneckerProduct>

#include "mixcat/errors.hpp"
#include "mixcat/rational.hpp"

namespace mixcat {

/// Labeled finite set. `factors` lists the atomic labels it was tensored
/// from (empty for the unit).
struct FinSet {
  std::string label;
  std::vector<std::string> elements;
  std::vector<std::string> factors;

  std::size_t size() const { return elements.size(); }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;
};

/// Throws ShapeError when element labels repeat.
FinSet make_finset(std::string label, std::vector<std::string> elements);
/// Elements "0", "1", ..., "n-1".
FinSet finset_of_size(std::string label, std::size_t n);
FinSet tensor(const FinSet& a, const FinSet& b);

/// Finite-dimensional object of Mat. Dimension 0 is the zero object.
struct MatObj {
  std::string label;
  std::vector<std::size_t> factors;
  std::size_t dim = 0;

  std::size_t size() const { return dim; }

  friend bool operator==(const MatObj&, const MatObj&) = default;
  friend auto operator<=>(const MatObj&, const MatObj&) = default;
};

MatObj make_matobj(std::size_t dim);
MatObj tensor(const MatObj& a, const MatObj& b);

struct Rel {
  using Scalar = bool;
  using Object = FinSet;
  static constexpr std::string_view name = "rel";
  static Object unit();
  static std::string scalar_text(bool value) { return value ? "1" : "0"; }
};

struct Mat {
  using Scalar = Rational;
  using Object = MatObj;
  static constexpr std::string_view name = "mat";
  static Object unit();
  static std::string scalar_text(const Rational& value) { return value.str(); }
};

template <class B>
concept BaseCategory = requires(const typename B::Object& obj, const typename B::Scalar& s) {
  typename B::Scalar;
  typename B::Object;
  { B::unit() } -> std::same_as<typename B::Object>;
  { B::scalar_text(s) } -> std::convertible_to<std::string>;
  { obj.size() } -> std::convertible_to<std::size_t>;
  { obj.label } -> std::convertible_to<std::string>;
};

template <BaseCategory Base>
using MatrixOf = Eigen::Matrix<typename Base::Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Same flattened factor list and cardinality: the objects differ only by
/// bracketing and unit insertions.
inline bool coherent(const FinSet& a, const FinSet& b) {
  return a.factors == b.factors && a.size() == b.size();
}
inline bool coherent(const MatObj& a, const MatObj& b) {
  return a.factors == b.factors && a.dim == b.dim;
}

/// Arrow of a base category. Immutable; the canonical key is
/// "src|tgt|entries" with row-major entries.
template <BaseCategory Base>
class Morphism {
 public:
  using Object = typename Base::Object;
  using Scalar = typename Base::Scalar;
  using MatrixType = MatrixOf<Base>;

  Morphism(Object src, Object tgt, MatrixType matrix)
      : src_(std::move(src)), tgt_(std::move(tgt)), matrix_(std::move(matrix)) {
    if (static_cast<std::size_t>(matrix_.rows()) != tgt_.size() ||
        static_cast<std::size_t>(matrix_.cols()) != src_.size()) {
      throw ShapeError("matrix is " + std::to_string(matrix_.rows()) + "x" +
                       std::to_string(matrix_.cols()) + " but arrow " + src_.label + " -> " +
                       tgt_.label + " needs " + std::to_string(tgt_.size()) + "x" +
                       std::to_string(src_.size()));
    }
    key_ = src_.label + "|" + tgt_.label + "|";
    for (Eigen::Index r = 0; r < matrix_.rows(); ++r) {
      for (Eigen::Index c = 0; c < matrix_.cols(); ++c) {
        if constexpr (std::same_as<Scalar, bool>) {
          key_ += matrix_(r, c) ? '1' : '0';
        } else {
          if (r != 0 || c != 0) key_ += ',';
          key_ += Base::scalar_text(matrix_(r, c));
        }
      }
    }
  }

  const Object& src() const { return src_; }
  const Object& tgt() const { return tgt_; }
  const MatrixType& matrix() const { return matrix_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.key_ == b.key_ && a.src_ == b.src_ && a.tgt_ == b.tgt_;
  }
  friend std::strong_ordering operator<=>(const Morphism& a, const Morphism& b) {
    if (auto c = a.key_ <=> b.key_; c != 0) return c;
    if (auto c = a.src_ <=> b.src_; c != 0) return c;
    return a.tgt_ <=> b.tgt_;
  }

 private:
  Object src_;
  Object tgt_;
  MatrixType matrix_;
  std::string key_;
};

using RelMorphism = Morphism<Rel>;
using MatMorphism = Morphism<Mat>;

template <BaseCategory Base>
Morphism<Base> identity(const typename Base::Object& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  return Morphism<Base>(a, a, MatrixOf<Base>::Identity(n, n));
}

template <BaseCategory Base>
Morphism<Base> zero(const typename Base::Object& a, const typename Base::Object& b) {
  return Morphism<Base>(a, b,
                        MatrixOf<Base>::Zero(static_cast<Eigen::Index>(b.size()),
                                             static_cast<Eigen::Index>(a.size())));
}

/// g ∘ f. Throws CompositionError unless f.tgt() == g.src().
template <BaseCategory Base>
Morphism<Base> compose(const Morphism<Base>& g, const Morphism<Base>& f) {
  if (!(f.tgt() == g.src())) {
    throw CompositionError("cannot compose " + g.src().label + " -> " + g.tgt().label + " after " +
                           f.src().label + " -> " + f.tgt().label);
  }
  MatrixOf<Base> product = g.matrix() * f.matrix();
  return Morphism<Base>(f.src(), g.tgt(), std::move(product));
}

template <BaseCategory Base>
Morphism<Base> tensor(const Morphism<Base>& f, const Morphism<Base>& g) {
  MatrixOf<Base> kron = Eigen::kroneckerProduct(f.matrix(), g.matrix()).eval();
  return Morphism<Base>(tensor(f.src(), g.src()), tensor(f.tgt(), g.tgt()), std::move(kron));
}

template <BaseCategory Base>
Morphism<Base> dagger(const Morphism<Base>& f) {
  MatrixOf<Base> t = f.matrix().transpose();
  return Morphism<Base>(f.tgt(), f.src(), std::move(t));
}

/// unit -> A ⊗ A, relating the unit element to every diagonal pair.
template <BaseCategory Base>
Morphism<Base> cup(const typename Base::Object& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  MatrixOf<Base> m = MatrixOf<Base>::Zero(n * n, 1);
  for (Eigen::Index i = 0; i < n; ++i) m(i * n + i, 0) = typename Base::Scalar(1);
  return Morphism<Base>(Base::unit(), tensor(a, a), std::move(m));
}

template <BaseCategory Base>
Morphism<Base> cap(const typename Base::Object& a) {
  return dagger(cup<Base>(a));
}

/// Reinterprets f between coherent objects (composition with associators
/// and unitors, which are identity matrices here).
template <BaseCategory Base>
Morphism<Base> relabel(const Morphism<Base>& f, const typename Base::Object& src,
                       const typename Base::Object& tgt) {
  if (!coherent(src, f.src()) || !coherent(tgt, f.tgt())) {
    throw CompositionError("no coherence isomorphism for " + f.src().label + " -> " +
                           f.tgt().label + " as " + src.label + " -> " + tgt.label);
  }
  return Morphism<Base>(src, tgt, f.matrix());
}

template <BaseCategory Base>
Morphism<Base> coherence_iso(const typename Base::Object& a, const typename Base::Object& b) {
  return relabel(identity<Base>(a), a, b);
}

/// (A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)
template <BaseCategory Base>
Morphism<Base> associator(const typename Base::Object& a, const typename Base::Object& b,
                          const typename Base::Object& c) {
  return coherence_iso<Base>(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

/// I ⊗ A -> A
template <BaseCategory Base>
Morphism<Base> left_unitor(const typename Base::Object& a) {
  return coherence_iso<Base>(tensor(Base::unit(), a), a);
}

/// A ⊗ I -> A
template <BaseCategory Base>
Morphism<Base> right_unitor(const typename Base::Object& a) {
  return coherence_iso<Base>(tensor(a, Base::unit()), a);
}

/// A ⊗ B -> B ⊗ A
template <BaseCategory Base>
Morphism<Base> symmetry(const typename Base::Object& a, const typename Base::Object& b) {
  const auto na = static_cast<Eigen::Index>(a.size());
  const auto nb = static_cast<Eigen::Index>(b.size());
  MatrixOf<Base> m = MatrixOf<Base>::Zero(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) m(j * na + i, i * nb + j) = typename Base::Scalar(1);
  }
  return Morphism<Base>(tensor(a, b), tensor(b, a), std::move(m));
}

template <BaseCategory Base>
bool equal_up_to_coherence(const Morphism<Base>& f, const Morphism<Base>& g) {
  return coherent(f.src(), g.src()) && coherent(f.tgt(), g.tgt()) && f.matrix() == g.matrix();
}

/// Left-nested tensor of the objects; the unit for an empty list.
template <BaseCategory Base>
typename Base::Object tensor_all(const std::vector<typename Base::Object>& objects) {
  if (objects.empty()) return Base::unit();
  auto out = objects.front();
  for (std::size_t i = 1; i < objects.size(); ++i) out = tensor(out, objects[i]);
  return out;
}

/// Rel arrow from (source index, target index) pairs.
RelMorphism relation(const FinSet& src, const FinSet& tgt,
                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

/// Every relation between two finite sets; |src|·|tgt| must be at most 20.
std::vector<RelMorphism> all_relations(const FinSet& src, const FinSet& tgt);

/// Boolean scalars of Rel: the true (identity) and false (empty) relations on the unit.
RelMorphism rel_true();
RelMorphism rel_false();

}  // namespace mixcat
