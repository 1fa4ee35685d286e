#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcw/bigint.hpp"
#include "qcw/rational.hpp"

namespace qcw {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// dense, ascending degree. The coefficient vector never ends in a zero, so
/// the zero polynomial is the empty vector and degree() == size - 1.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long long> coeffs);

  static QPoly monomial(BigInt coeff, std::size_t power);
  /// The indeterminate itself.
  static QPoly q() { return monomial(1, 1); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of q^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }

  /// gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// Multiplicity of q as a factor (0 for the zero polynomial).
  std::size_t low_order() const;

  QPoly shifted(std::size_t power) const;
  /// Exact division of every coefficient by `divisor`; caller guarantees
  /// divisibility.
  QPoly divided_exactly(const BigInt& divisor) const;
  /// Drops the lowest `power` coefficients, which must be zero.
  QPoly unshifted(std::size_t power) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly operator-() const;

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);

  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Horner evaluation in exact rationals.
  Rational eval(const Rational& x) const;
  BigInt eval(const BigInt& x) const;

  /// Human-readable form in ascending degree, e.g. "1 + 2q + q^2".
  std::string to_string(char var = 'q') const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace qcw
