#pragma once

#include <cstdint>
#include <vector>

#include "qcw/qpoly.hpp"
#include "qcw/rational.hpp"
#include "qcw/report.hpp"

namespace qcw {

/// Stern's diatomic sequence: b_1 = 1, b_2n = b_n, b_2n+1 = b_n + b_n+1.
/// Requires n >= 1.
std::uint64_t stern(std::uint64_t n);

/// First `count` terms of x_1 = 1, x_{n+1} = 1 / (2 floor(x_n) + 1 - x_n).
std::vector<Rational> newman_seq(std::size_t count);

/// F_0 = F_1 = 1, F_2n = F_n, F_2n+1 = q F_n + F_n+1.
QPoly dilcher_F(std::uint64_t n);

/// Cross-checks Stern, Newman and Dilcher-Stolarsky values against each
/// other and against f_{2,0} for indices up to `bound`.
VerifyReport verify_classic(std::uint64_t bound);

}  // namespace qcw
