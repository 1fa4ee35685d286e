#include "qcw/qrat.hpp"

#include <algorithm>
#include <ostream>

#include "qcw/errors.hpp"

namespace qcw {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("QRat with zero denominator");
}

QRat QRat::operator+(const QRat& rhs) const {
  if (den_ == rhs.den_) return QRat(num_ + rhs.num_, den_);
  return QRat(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

QRat QRat::operator*(const QRat& rhs) const { return QRat(num_ * rhs.num_, den_ * rhs.den_); }

QRat QRat::operator/(const QRat& rhs) const {
  if (rhs.num_.is_zero()) throw DivisionByZero("QRat division by zero");
  return QRat(num_ * rhs.den_, den_ * rhs.num_);
}

QRat QRat::reciprocal() const {
  if (num_.is_zero()) throw DivisionByZero("reciprocal of zero QRat");
  return QRat(den_, num_);
}

Rational QRat::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("denominator " + den_.to_string() + " vanishes at q = " + x.to_string());
  return num_.eval(x) / d;
}

QRat QRat::normalized() const {
  QPoly num = num_;
  QPoly den = den_;
  if (num.is_zero()) return QRat(QPoly(), QPoly(1));
  BigInt g = boost::multiprecision::gcd(num.content(), den.content());
  if (den.leading() < 0) g = -g;
  if (g != 1) {
    num = num.divided_exactly(g);
    den = den.divided_exactly(g);
  }
  const std::size_t shift = std::min(num.low_order(), den.low_order());
  if (shift > 0) {
    num = num.unshifted(shift);
    den = den.unshifted(shift);
  }
  return QRat(std::move(num), std::move(den));
}

namespace {

std::string wrap(const QPoly& p) {
  std::string s = p.to_string();
  const bool single_term =
      std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const BigInt& c) { return c != 0; }) <= 1;
  return single_term ? s : "(" + s + ")";
}

}  // namespace

std::string QRat::to_string() const {
  QRat n = normalized();
  return wrap(n.num_) + "/" + wrap(n.den_);
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

}  // namespace qcw
