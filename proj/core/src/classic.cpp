#include "qcw/classic.hpp"

#include <utility>

#include "qcw/errors.hpp"
#include "qcw/expansions.hpp"

namespace qcw {

namespace {

// (b_n, b_{n+1}) by halving n; the recurrences only hold from n = 1 on, so
// n = 1 is the base.
std::pair<std::uint64_t, std::uint64_t> stern_pair(std::uint64_t n) {
  if (n == 1) return {1, 1};
  const auto [lo, hi] = stern_pair(n / 2);
  if (n % 2 == 0) return {lo, lo + hi};
  return {lo + hi, hi};
}

std::pair<QPoly, QPoly> dilcher_pair(std::uint64_t n) {
  if (n <= 1) return {QPoly(1), QPoly(1)};
  auto [lo, hi] = dilcher_pair(n / 2);
  QPoly odd = lo.shifted(1) + hi;
  if (n % 2 == 0) return {std::move(lo), std::move(odd)};
  return {std::move(odd), std::move(hi)};
}

}  // namespace

std::uint64_t stern(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("stern index must be >= 1");
  return stern_pair(n).first;
}

std::vector<Rational> newman_seq(std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  out.reserve(count);
  out.emplace_back(1);
  while (out.size() < count) {
    const Rational& x = out.back();
    out.push_back((Rational(2 * x.floor() + 1) - x).reciprocal());
  }
  return out;
}

QPoly dilcher_F(std::uint64_t n) { return dilcher_pair(n).first; }

VerifyReport verify_classic(std::uint64_t bound) {
  VerifyReport report;
  report.suite = "classic";
  report.add_parameter("bound", std::to_string(bound));
  const HyperParams hyperbinary(2, 0);
  const auto newman = newman_seq(bound);
  for (std::uint64_t n = 1; n <= bound; ++n) {
    const std::string at = "n=" + std::to_string(n);
    const Rational expected(BigInt(stern(n)), BigInt(stern(n + 1)));
    report.check(newman[n - 1] == expected, "newman " + at, expected.to_string(), newman[n - 1].to_string());

    const QPoly fn = dilcher_F(n);
    report.check(fn.eval(BigInt(1)) == stern(n), "F_n(1) " + at, std::to_string(stern(n)), fn.eval(BigInt(1)).str());

    const QPoly alias = f_poly(static_cast<std::int64_t>(n) - 1, hyperbinary);
    report.check(alias == fn, "F_n = f_{2,0}(n-1) " + at, fn.to_string(), alias.to_string());

    const Rational ratio(alias.eval(BigInt(1)), f_poly(static_cast<std::int64_t>(n), hyperbinary).eval(BigInt(1)));
    report.check(ratio == newman[n - 1], "f ratio at q=1 " + at, newman[n - 1].to_string(), ratio.to_string());
  }
  // Calkin-Wilf child rules on the sequence read as a tree: x_2n = a/(a+b),
  // x_2n+1 = (a+b)/b.
  for (std::uint64_t n = 1; 2 * n + 1 <= bound; ++n) {
    const Rational& x = newman[n - 1];
    const Rational left(x.num(), x.num() + x.den());
    const Rational right(x.num() + x.den(), x.den());
    report.check(newman[2 * n - 1] == left, "left child n=" + std::to_string(n), left.to_string(),
                 newman[2 * n - 1].to_string());
    report.check(newman[2 * n] == right, "right child n=" + std::to_string(n), right.to_string(),
                 newman[2 * n].to_string());
  }
  return report;
}

}  // namespace qcw
