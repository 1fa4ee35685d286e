#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcw/bigint.hpp"
#include "qcw/cwtree.hpp"
#include "qcw/report.hpp"

namespace qcw {

/// Reduced fraction a/b with 0 < a <= b.
class Fraction {
 public:
  /// Throws InvalidTarget unless 0 < a <= b and gcd(a, b) = 1.
  Fraction(BigInt a, BigInt b);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  std::string to_string() const { return a_.str() + "/" + b_.str(); }
  /// Accepts "a/b".
  static Fraction parse(const std::string& text);

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  BigInt a_;
  BigInt b_;
};

/// Child positions (1..m) from the root.
struct Path {
  std::vector<int> steps;

  std::string to_string() const;
  friend bool operator==(const Path&, const Path&) = default;
};

/// f_0 = f_1 = 1, f_i = f_{i-1} + f_{i-2}.
BigInt fib(std::uint64_t i);

/// Smallest k >= 1 with d | fib(k). Throws SearchBoundExceeded past 6d.
std::uint64_t fib_entry_point(const BigInt& d);

struct DensityOptions {
  /// Upper bound on a single path's length.
  std::uint64_t max_path_length = 20'000'000;
};

/// A root-to-vertex path whose q = 1 label is `target`.
///   c = m-1 (m >= 3): walk the m-th branch of the root to 1/x, step to the
///     (m-2)-nd child 1/2, follow (m-1)-st children along the Fibonacci chain
///     fib(i)/fib(i+1), and finish with one m-th child.
///   c = 0 (root 1/1): recursion on a+b through (m-1)-st children and runs
///     of m-th children.
///   1 <= c <= m-2: recursion on a+b through the c-th and (c+1)-st children.
/// Throws UnsupportedCase for c = m-1 with m = 2 and for the c = 0 tree
/// rooted at 1/(1+q).
Path find_path(const Fraction& target, const TreeParams& params, const DensityOptions& options = {});

/// Follows `path` at q = 1 through the structural child rules.
Fraction replay_path(const Path& path, const TreeParams& params);

/// find_path + replay_path over every reduced a/b with 1 <= a <= b <= bound.
/// The c = 0 family is always checked with the 1/1 root.
VerifyReport verify_density(const TreeParams& params, std::int64_t bound, const DensityOptions& options = {});

}  // namespace qcw
