#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace mixcat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator,
/// so structural equality coincides with numeric equality.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit, Eigen builds Scalar(0)/Scalar(1)
  Rational(BigInt num, BigInt den);
  Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p/q", "p" and an optional leading sign. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_negative() const { return num_ < 0; }

  /// Always "num/den", including integers ("1/1").
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(Rational value) {
    value.num_ = -value.num_;
    return value;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void normalize();

  BigInt num_{0};
  BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline std::string describe(const Rational& value) { return value.str(); }

inline Rational abs(const Rational& value) { return value.is_negative() ? -value : value; }

}  // namespace mixcat

namespace Eigen {

template <>
struct NumTraits<mixcat::Rational> : GenericNumTraits<mixcat::Rational> {
  using Real = mixcat::Rational;
  using NonInteger = mixcat::Rational;
  using Nested = mixcat::Rational;
  using Literal = mixcat::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
