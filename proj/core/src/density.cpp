#include "qcw/density.hpp"

#include <algorithm>
#include <numeric>

#include "qcw/errors.hpp"

namespace qcw {

Fraction::Fraction(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ <= 0 || b_ <= 0) throw InvalidTarget("fraction " + to_string() + " must be positive");
  if (a_ > b_) throw InvalidTarget("fraction " + to_string() + " exceeds 1");
  if (boost::multiprecision::gcd(a_, b_) != 1) throw InvalidTarget("fraction " + to_string() + " is not reduced");
}

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw InvalidTarget("expected a/b, got '" + text + "'");
  const Rational a = Rational::parse(text.substr(0, slash));
  const Rational b = Rational::parse(text.substr(slash + 1));
  if (!a.is_integer() || !b.is_integer()) throw InvalidTarget("expected integers in '" + text + "'");
  return Fraction(a.num(), b.num());
}

std::string Path::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(steps[i]);
  }
  return out;
}

BigInt fib(std::uint64_t i) {
  BigInt prev = 1;
  BigInt cur = 1;
  for (std::uint64_t k = 1; k < i; ++k) {
    BigInt next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t fib_entry_point(const BigInt& d) {
  if (d < 1) throw InvalidArgument("fib_entry_point needs d >= 1");
  // Scan residues; fib(k) mod d.
  BigInt prev = 1 % d;  // fib(0)
  BigInt cur = 1 % d;   // fib(1)
  const BigInt limit = 6 * d;
  for (std::uint64_t k = 1;; ++k) {
    if (cur == 0) return k;
    if (BigInt(k) > limit) throw SearchBoundExceeded("no Fibonacci entry point found for d = " + d.str());
    BigInt next = (prev + cur) % d;
    prev = std::move(cur);
    cur = std::move(next);
  }
}

namespace {

void append_run(std::vector<int>& steps, int k, const BigInt& count, const DensityOptions& options) {
  if (count < 0) throw InvalidTarget("negative run length");
  if (BigInt(steps.size()) + count > options.max_path_length) {
    throw LimitExceeded("path length exceeds " + std::to_string(options.max_path_length));
  }
  steps.insert(steps.end(), static_cast<std::size_t>(count), k);
}

// c = m-1, m >= 3.
void last_offset_path(const BigInt& a, const BigInt& b, int m, std::vector<int>& steps,
                      const DensityOptions& options) {
  if (a == b) return;
  if (a == 1) {
    append_run(steps, m, b - 1, options);
    return;
  }
  const BigInt d = b - a;
  std::uint64_t k = fib_entry_point(d);
  if (k < 2) k = 2;  // t = k - 1 must be at least 1
  const std::uint64_t t = k - 1;
  const BigInt u = fib(k) / d;
  const BigInt x = u * a;
  append_run(steps, m, x - 1, options);
  append_run(steps, m - 2, 1, options);
  append_run(steps, m - 1, BigInt(t - 1), options);
  append_run(steps, m, 1, options);
}

// c = 0, root 1/1. Iterative form of the recursion on a + b: pieces are
// produced deepest-last and reversed at the end.
void zero_offset_path(BigInt a, BigInt b, int m, std::vector<int>& steps, const DensityOptions& options) {
  std::vector<std::pair<int, BigInt>> runs;  // appended in reverse order
  BigInt total = 0;
  while (a != b) {
    if (2 * a <= b) {
      runs.emplace_back(m - 1, 1);
      total += 1;
      b -= a;
      continue;
    }
    // j/(j+1) < a/b <= (j+1)/(j+2)  <=>  j < a/(b-a) <= j+1
    const BigInt d = b - a;
    const BigInt j = (a + d - 1) / d - 1;
    const BigInt x = (j + 1) * a - j * b;
    const BigInt y = j * a - (j - 1) * b;
    runs.emplace_back(m, j);
    runs.emplace_back(m - 1, 1);
    total += j + 1;
    if (total > options.max_path_length) {
      throw LimitExceeded("path length exceeds " + std::to_string(options.max_path_length));
    }
    a = x;
    b = y - x;
  }
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) append_run(steps, it->first, it->second, options);
}

void middle_offset_path(BigInt a, BigInt b, int c, std::vector<int>& steps) {
  std::vector<int> reversed;
  while (a != b) {
    const BigInt rest = b - a;
    if (a == rest) {
      reversed.push_back(c);
      b = a;  // parent 1/1
    } else if (a < rest) {
      reversed.push_back(c + 1);
      b = rest;
    } else {
      reversed.push_back(c);
      b = a;
      a = rest;
    }
  }
  steps.insert(steps.end(), reversed.rbegin(), reversed.rend());
}

}  // namespace

Path find_path(const Fraction& target, const TreeParams& params, const DensityOptions& options) {
  Path path;
  switch (params.family()) {
    case TreeFamily::kLastOffset:
      if (params.m() < 3) throw UnsupportedCase("density search for c = m-1 needs m >= 3");
      last_offset_path(target.a(), target.b(), params.m(), path.steps, options);
      break;
    case TreeFamily::kZeroOffset:
      if (params.root_mode() != RootMode::kDefinition) {
        throw UnsupportedCase("density search for c = 0 uses the tree rooted at 1/1");
      }
      zero_offset_path(target.a(), target.b(), params.m(), path.steps, options);
      break;
    case TreeFamily::kMiddleOffset:
      middle_offset_path(target.a(), target.b(), params.c(), path.steps);
      break;
  }
  return path;
}

Fraction replay_path(const Path& path, const TreeParams& params) {
  const Rational value = label_by_path_at(path.steps, params, Rational(1));
  return Fraction(value.num(), value.den());
}

VerifyReport verify_density(const TreeParams& requested, std::int64_t bound, const DensityOptions& options) {
  if (bound < 1) throw InvalidArgument("bound must be at least 1");
  const TreeParams params = requested.family() == TreeFamily::kZeroOffset
                                ? requested.with_root_mode(RootMode::kDefinition)
                                : requested;
  VerifyReport report;
  report.suite = "density";
  report.add_parameter("m", std::to_string(params.m()));
  report.add_parameter("c", std::to_string(params.c()));
  report.add_parameter("bound", std::to_string(bound));
  std::size_t longest = 0;
  std::string longest_target = "1/1";
  std::uint64_t total_steps = 0;
  std::uint64_t targets = 0;
  for (std::int64_t b = 1; b <= bound; ++b) {
    for (std::int64_t a = 1; a <= b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const Fraction target(a, b);
      std::string actual;
      bool ok = false;
      try {
        const Path path = find_path(target, params, options);
        const Fraction reached = replay_path(path, params);
        ok = reached == target;
        actual = reached.to_string();
        total_steps += path.steps.size();
        ++targets;
        if (path.steps.size() > longest) {
          longest = path.steps.size();
          longest_target = target.to_string();
        }
      } catch (const Error& e) {
        actual = std::string("error: ") + e.what();
      }
      report.check(ok, target.to_string(), target.to_string(), actual);
    }
  }
  report.note("targets: " + std::to_string(targets) + ", total path steps: " + std::to_string(total_steps) +
              ", longest path: " + std::to_string(longest) + " (" + longest_target + ")");
  return report;
}

}  // namespace qcw
