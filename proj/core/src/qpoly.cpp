#include "qcw/qpoly.hpp"

#include <algorithm>
#include <ostream>

namespace qcw {

QPoly::QPoly(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::monomial(BigInt coeff, std::size_t power) {
  if (coeff == 0) return {};
  QPoly p;
  p.coeffs_.assign(power + 1, BigInt(0));
  p.coeffs_[power] = std::move(coeff);
  return p;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt QPoly::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    g = g == 0 ? BigInt(abs(c)) : BigInt(boost::multiprecision::gcd(g, c));
    if (g == 1) break;
  }
  return g;
}

std::size_t QPoly::low_order() const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k == coeffs_.size() ? 0 : k;
}

QPoly QPoly::shifted(std::size_t power) const {
  if (is_zero() || power == 0) return *this;
  QPoly p;
  p.coeffs_.reserve(coeffs_.size() + power);
  p.coeffs_.assign(power, BigInt(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

QPoly QPoly::unshifted(std::size_t power) const {
  if (power >= coeffs_.size()) return {};
  return QPoly(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(power), coeffs_.end()));
}

QPoly QPoly::divided_exactly(const BigInt& divisor) const {
  QPoly p = *this;
  for (auto& c : p.coeffs_) c /= divisor;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Rational QPoly::eval(const Rational& x) const {
  // Horner over a common denominator: sum c_i num^i den^(d-i), then divide
  // once by den^d.
  if (is_zero()) return Rational();
  BigInt acc = 0;
  BigInt den_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x.num() + *it * den_power;
    den_power *= x.den();
  }
  // den_power now holds den^(d+1); one factor too many.
  return Rational(std::move(acc), den_power / x.den());
}

BigInt QPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string QPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

}  // namespace qcw
