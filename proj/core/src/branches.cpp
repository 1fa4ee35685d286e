#include "qcw/branches.hpp"

#include <algorithm>
#include <limits>

#include "qcw/errors.hpp"

namespace qcw {

ChebyPoly chebyshev_U(int n) {
  if (n < 0) throw InvalidArgument("Chebyshev index must be non-negative");
  const QPoly two_t = QPoly::monomial(2, 1);
  QPoly prev(1);
  QPoly cur = two_t;
  if (n == 0) return ChebyPoly(prev);
  for (int i = 2; i <= n; ++i) {
    QPoly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return ChebyPoly(cur);
}

QPoly branch_poly_W(int j) {
  if (j < -1) throw InvalidArgument("branch polynomial index must be >= -1");
  if (j <= 0) return QPoly(1);
  const QPoly q = QPoly::q();
  QPoly prev(1);       // W_{-1}
  QPoly cur(1);        // W_0
  for (int i = 1; i <= j; ++i) {
    QPoly next = cur + q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QRat branch_ratio(int j) { return QRat(branch_poly_W(j - 1), branch_poly_W(j)); }

std::vector<QRat> extract_branch(const Tree& tree, std::uint64_t v_index, int k, std::size_t length) {
  const auto m = static_cast<std::uint64_t>(tree.params().m());
  if (k < 1 || static_cast<std::uint64_t>(k) > m) throw InvalidArgument("child position out of range");
  std::vector<QRat> out;
  out.reserve(length);
  std::uint64_t index = v_index;
  for (std::size_t i = 0; i < length; ++i) {
    if (!tree.contains(index)) {
      throw InsufficientDepth("branch needs node " + std::to_string(index) + " but the tree has depth " +
                              std::to_string(tree.depth()));
    }
    out.push_back(tree.nodes()[index].label);
    if (i + 1 < length) {
      if (index > (std::numeric_limits<std::uint64_t>::max() - m) / m) throw InsufficientDepth("branch index overflow");
      index = m * index + static_cast<std::uint64_t>(k);
    }
  }
  return out;
}

VerifyReport verify_chebyshev_identity(int j_max, std::span<const long long> rs) {
  VerifyReport report;
  report.suite = "chebyshev_identity";
  report.add_parameter("j_max", std::to_string(j_max));
  for (long long r : rs) {
    if (r == 0) throw InvalidArgument("r must be nonzero");
    const Rational rr(r);
    const Rational q = -(rr * rr);
    const Rational t = Rational(BigInt(1), BigInt(2 * r));
    for (int j = 0; j <= j_max; ++j) {
      const Rational lhs = branch_poly_W(j).eval(q);
      Rational scale(1);
      for (int i = 0; i < j + 1; ++i) scale *= rr;
      const Rational rhs = scale * chebyshev_U(j + 1).eval(t);
      report.check(lhs == rhs, "j=" + std::to_string(j) + " r=" + std::to_string(r), rhs.to_string(),
                   lhs.to_string());
    }
  }
  return report;
}

namespace {

std::uint64_t checked_power_minus_one(int m, int j) {
  std::uint64_t p = 1;
  for (int i = 0; i < j; ++i) {
    if (p > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(m)) {
      throw LimitExceeded("m^j overflows 64 bits");
    }
    p *= static_cast<std::uint64_t>(m);
  }
  return p - 1;
}

// 1 / (1 + q + ... + q^(i-1) + q^i t)
QRat mth_branch_term(int i, const QPoly& t) {
  QPoly den;
  for (int e = 0; e < i; ++e) den += QPoly::monomial(1, static_cast<std::size_t>(e));
  den += t.shifted(static_cast<std::size_t>(i));
  return QRat(QPoly(1), den);
}

}  // namespace

VerifyReport verify_branch_theorems(const TreeParams& params, int j_max, const BranchOptions& options) {
  if (params.family() != TreeFamily::kLastOffset) {
    throw UnsupportedCase("branch identities are stated for c = m-1 only");
  }
  if (j_max < 0) throw InvalidArgument("j_max must be non-negative");
  const int m = params.m();
  VerifyReport report;
  report.suite = "branch_theorems";
  report.add_parameter("m", std::to_string(m));
  report.add_parameter("c", std::to_string(params.c()));
  report.add_parameter("j_max", std::to_string(j_max));

  const int depth = std::min(j_max + options.tail, options.tree.depth_guard);
  report.add_parameter("tree_depth", std::to_string(depth));
  const Tree tree = build_tree(params, depth, options.tree);
  const QRat constant(QPoly(1), QPoly{1, 1});

  // (i) root's (m-1)-st branch; its tails are the (m-1)-st branches of the
  // vertices on it.
  const auto spine = extract_branch(tree, 0, m - 1, static_cast<std::size_t>(depth) + 1);
  for (int j = 0; j <= depth; ++j) {
    const QRat expected = branch_ratio(j);
    report.check(spine[j] == expected, "(i) j=" + std::to_string(j), expected.to_string(), spine[j].to_string());
  }

  const int covered = std::min(j_max, depth);
  if (m >= 3) {
    for (int j = 0; j <= covered; ++j) {
      const std::uint64_t v = checked_power_minus_one(m, j);
      const auto len = static_cast<std::size_t>(depth - j) + 1;
      const QPoly t = branch_poly_W(j);
      // (ii)
      const auto mth = extract_branch(tree, v, m, len);
      for (std::size_t i = 1; i < len; ++i) {
        const QRat expected = mth_branch_term(static_cast<int>(i), t);
        report.check(mth[i] == expected, "(ii) j=" + std::to_string(j) + " i=" + std::to_string(i),
                     expected.to_string(), mth[i].to_string());
      }
      // (iii)
      for (int k = 1; k <= m - 2; ++k) {
        const auto side = extract_branch(tree, v, k, len);
        for (std::size_t i = 1; i < len; ++i) {
          report.check(side[i] == constant,
                       "(iii) j=" + std::to_string(j) + " k=" + std::to_string(k) + " i=" + std::to_string(i),
                       constant.to_string(), side[i].to_string());
        }
      }
    }
  } else {
    report.note("m = 2: the m-th and side-branch closed forms are stated for m >= 3; checks (ii) and (iii) skipped");
  }

  // (iv)
  QRat previous = ratio_label(0, params);
  report.check(previous == QRat(1), "(iv) j=0", "1/1", previous.to_string());
  const QPoly q = QPoly::q();
  for (int j = 1; j <= j_max; ++j) {
    const QRat current = ratio_label(checked_power_minus_one(m, j), params);
    const QRat recurrence = QRat(1) / (QRat(1) + QRat(q) * previous);
    report.check(current == recurrence, "(iv) recurrence j=" + std::to_string(j), recurrence.to_string(),
                 current.to_string());
    const QRat closed = branch_ratio(j);
    report.check(current == closed, "(iv) closed form j=" + std::to_string(j), closed.to_string(),
                 current.to_string());
    previous = current;
  }
  if (covered < j_max) {
    report.note("tree checks cover j <= " + std::to_string(covered) + " (depth guard); (iv) covers j <= " +
                std::to_string(j_max));
  }
  return report;
}

}  // namespace qcw
