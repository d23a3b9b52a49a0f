#pragma once

#include <memory>

#include "freeo/exact_linalg.hpp"
#include "freeo/tl_diagrams.hpp"

namespace freeo {

inline constexpr int kDefaultExactCap = 6;
inline constexpr int kSymbolicCap = 5;

/// Exact cap on k for numeric Weingarten work: FREEO_CAP_K when set, else 6.
int exact_cap();

/// Gram matrix request: k strings, loop weight N (a rational, or the indeterminate n).
struct GramSpec {
    int k;
    Scalar loop_weight;

    static GramSpec numeric(int k, const Rational& n) { return {k, Scalar(n)}; }
    static GramSpec symbolic(int k) { return {k, Scalar(RationalFunction::indeterminate())}; }
};

/// Loop counts l(p, q) over the canonical diagram order, row-major C_k x C_k. Cached per k.
std::shared_ptr<const std::vector<int>> loop_count_table(int k);

/// G(p, q) = N^l(p,q) over the canonical diagram order.
ExactMatrix gram_matrix(const GramSpec& spec);

/// W = G^{-1}, memoized per (k, N). Throws SingularMatrixError when G is singular.
std::shared_ptr<const ExactMatrix> weingarten_matrix(const GramSpec& spec);

/// Sum of all Weingarten entries at N = n, i.e. the 2k-th moment of u_ij; with
/// `normalized` it is scaled by (n+2)^k, the moment of sqrt(n+2) u_ij.
///
/// Computed from one fraction-free solve G x = 1, since 1^T G^{-1} 1 is the entry
/// sum of W. Odd orders are rejected: they vanish by symmetry and callers report
/// them as zero directly.
Rational moment_uij(int n, int two_k, bool normalized = true);

/// Normalized moment (n+2)^k * sum W as a reduced rational function of n.
///
/// det G(n) and 1^T adj G(n) 1 are integer polynomials of degree at most k*C_k.
/// Both are recovered exactly by interpolation through k*C_k + 1 integer points,
/// each point being one integer fraction-free solve, and the quotient is reduced.
RationalFunction moment_rational_in_n(int two_k);

/// 2k-th moment of w = sum_ij v_ij under the Haar state of A_o(F), in extended
/// precision: (sum_ij F_ij)^(2k) * 1^T W_{kN} 1 with N = sum_ij F_ij^2.
/// Throws ConditionError when the floating-point Gram system is near singular.
Real general_F_moment(const RealMatrix& f, int two_k);

/// The 2x2 matrix F with A_o(F) = C(SU_q(2)): [[0, sqrt(-q)], [1/sqrt(-q), 0]].
RealMatrix suq2_parameter_matrix(Real q);

}  // namespace freeo
