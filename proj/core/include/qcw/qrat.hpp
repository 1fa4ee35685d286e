#pragma once

#include <iosfwd>
#include <string>

#include "qcw/qpoly.hpp"
#include "qcw/rational.hpp"

namespace qcw {

/// Ratio of two QPoly values. Stored exactly as produced, never reduced;
/// operator== compares by cross-multiplication.
class QRat {
 public:
  QRat() : num_(1), den_(1) {}
  QRat(QPoly num, QPoly den);  // throws DivisionByZero on a zero denominator
  QRat(QPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(long long value) : num_(value), den_(1) {}     // NOLINT(google-explicit-constructor)

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  QRat operator+(const QRat& rhs) const;
  QRat operator*(const QRat& rhs) const;
  QRat operator/(const QRat& rhs) const;
  QRat reciprocal() const;

  /// Extensional equality: num1·den2 == num2·den1.
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  /// Representation equality (same stored numerator and denominator).
  bool identical(const QRat& other) const { return num_ == other.num_ && den_ == other.den_; }

  /// Exact value at x; throws DivisionByZero if the denominator vanishes there.
  Rational eval(const Rational& x) const;

  /// Same value with the common integer content and common power of q
  /// divided out and a positive leading denominator coefficient. Display
  /// helper only; no polynomial gcd is taken.
  QRat normalized() const;

  /// "num/den" of the normalized form, parenthesizing multi-term parts.
  std::string to_string() const;

 private:
  QPoly num_;
  QPoly den_;
};

inline bool qrat_equal(const QRat& a, const QRat& b) { return a == b; }

std::ostream& operator<<(std::ostream& os, const QRat& r);

}  // namespace qcw
