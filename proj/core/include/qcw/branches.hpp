#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcw/cwtree.hpp"
#include "qcw/qpoly.hpp"
#include "qcw/qrat.hpp"
#include "qcw/report.hpp"

namespace qcw {

/// Integer polynomial in t (Chebyshev polynomials of the second kind).
class ChebyPoly {
 public:
  explicit ChebyPoly(QPoly poly) : poly_(std::move(poly)) {}

  const std::vector<BigInt>& coeffs() const { return poly_.coeffs(); }
  int degree() const { return poly_.degree(); }
  Rational eval(const Rational& t) const { return poly_.eval(t); }
  std::string to_string() const { return poly_.to_string('t'); }

  friend bool operator==(const ChebyPoly&, const ChebyPoly&) = default;

 private:
  QPoly poly_;
};

/// U_0 = 1, U_1 = 2t, U_n = 2t U_{n-1} - U_{n-2}.
ChebyPoly chebyshev_U(int n);

/// W_{-1} = W_0 = 1 (so W_1 = 1 + q), W_j = W_{j-1} + q W_{j-2}.
/// W_j(-r^2) = r^(j+1) U_{j+1}(1/(2r)) for rational r != 0.
QPoly branch_poly_W(int j);

/// W_{j-1} / W_j: the j-th label on the (m-1)-st branch of the root.
QRat branch_ratio(int j);

/// Labels v, then its k-th child, then that node's k-th child, ...;
/// `length` labels in total. Throws InsufficientDepth if the tree is too
/// shallow.
std::vector<QRat> extract_branch(const Tree& tree, std::uint64_t v_index, int k, std::size_t length);

/// W_j(-r^2) == r^(j+1) U_{j+1}(1/(2r)) for 0 <= j <= j_max and each r.
VerifyReport verify_chebyshev_identity(int j_max, std::span<const long long> rs);

struct BranchOptions {
  /// Labels checked past each Chebyshev-labeled vertex, depth permitting.
  int tail = 3;
  TreeOptions tree;
};

/// Checks, for the c = m-1 tree:
///  (i)   the root's (m-1)-st branch is W_{j-1}/W_j;
///  (ii)  the m-th branch of the j-th vertex on it is
///        v, 1/(1+q t), 1/(1+q+q^2 t), ... with t = W_j (m >= 3);
///  (iii) its k-th branches for k <= m-2 are v, 1/(1+q), 1/(1+q), ...;
///  (iv)  ratio_label(m^j - 1) = 1/(1 + q ratio_label(m^(j-1) - 1)) = W_{j-1}/W_j.
/// (i)-(iii) run on a generated tree of depth min(j_max + tail, guard);
/// (iv) uses the closed form only and covers all j <= j_max.
VerifyReport verify_branch_theorems(const TreeParams& params, int j_max, const BranchOptions& options = {});

}  // namespace qcw
