#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcw/qpoly.hpp"
#include "qcw/report.hpp"

namespace qcw {

/// Base m >= 2 and offset 0 <= c <= m-1. Validated on construction.
class HyperParams {
 public:
  HyperParams(int m, int c);

  int m() const { return m_; }
  int c() const { return c_; }
  /// The one multiplicity above m-1 that a power may take: m + c.
  int big_multiplicity() const { return m_ + c_; }
  /// Admissible nonzero multiplicities in ascending order: 1..m-1, m+c.
  std::vector<int> multiplicities() const;

  friend bool operator==(const HyperParams&, const HyperParams&) = default;

 private:
  int m_;
  int c_;
};

/// A partition of n into powers of m, stored as exponent -> multiplicity.
/// Absent exponents have multiplicity 0.
class Expansion {
 public:
  Expansion() = default;
  explicit Expansion(std::map<int, int> mult) : mult_(std::move(mult)) {}

  const std::map<int, int>& multiplicities() const { return mult_; }
  int multiplicity(int exponent) const;
  /// Sum of mult(e)·m^e.
  std::uint64_t total(int m) const;
  /// True when every stored multiplicity is admissible for `params`.
  bool valid_for(const HyperParams& params) const;
  /// "m^e×k" terms joined by " + ", highest exponent first; "0" when empty.
  std::string to_string(int m) const;

  friend bool operator==(const Expansion&, const Expansion&) = default;
  friend auto operator<=>(const Expansion&, const Expansion&) = default;

 private:
  std::map<int, int> mult_;
};

struct WeightedCount {
  int h = 0;
  friend bool operator==(const WeightedCount&, const WeightedCount&) = default;
};

/// All c-hyper m-expansions of n, in lexicographic order of the
/// multiplicity tuple read from the highest exponent down. n = 0 yields the
/// single empty expansion.
std::vector<Expansion> enumerate_expansions(std::uint64_t n, const HyperParams& params);

/// Number of powers used exactly m+c times.
WeightedCount hyper_weight(const Expansion& x, const HyperParams& params);

/// Sum of q^h over all expansions of n, by full enumeration. Zero for n < 0.
QPoly g_poly(std::int64_t n, const HyperParams& params);

/// The digit recurrence: f(0) = 1, f(d) = 0 for d < 0,
/// f(mk + j) = f(k) for j != c and f(mk + c) = f(k) + q f(k-1).
/// Memoized in a process-wide, internally synchronized cache.
QPoly f_poly(std::int64_t n, const HyperParams& params);

/// Compares f_poly and g_poly for every 0 <= n <= n_max.
VerifyReport verify_f_equals_g(const HyperParams& params, std::int64_t n_max);

}  // namespace qcw
