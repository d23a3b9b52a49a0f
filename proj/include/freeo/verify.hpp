#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freeo/polynomial.hpp"
#include "freeo/qlaw.hpp"
#include "freeo/real.hpp"

namespace freeo {

/// One row of a verification report. `tolerance` is absolute: relative checks
/// store tol * max(1, |value_b|).
struct Check {
    std::string check;
    std::string method_a;
    std::string method_b;
    Real value_a = 0;
    Real value_b = 0;
    Real abs_diff = 0;
    Real tolerance = 0;
    bool pass = false;
};

/// Compares two values against an absolute or a relative tolerance.
Check compare(std::string check, std::string method_a, Real value_a, std::string method_b, Real value_b, Real tol,
              bool relative);

/// A boolean condition, reported with value_a = observed and value_b = expected.
Check condition(std::string check, std::string method_a, Real observed, Real expected, bool pass);

struct MomentRow {
    int two_k = 0;
    std::optional<Rational> weingarten_exact;
    std::optional<Real> closed_form;
    std::optional<Real> operator_trace;
    std::optional<Real> density_quadrature;
};

struct MomentOptions {
    bool exact = true;
    bool closed_form = true;
    bool operator_trace = true;
    bool density_quadrature = true;
    int trunc_K = 60;
    int u_points = 0;  // 0 selects 2k + 1 per order
    int grid = 4096;
    Real series_eps = kDefaultSeriesEps;
    int precision_bits = kDefaultPrecisionBits;
};

/// Moments of sqrt(n+2) u_ij for orders 1..2 k_max by every enabled method.
/// Odd orders are reported as exactly 0 by every method.
struct MomentReport {
    Real n = 0;
    std::vector<MomentRow> rows;

    static MomentReport build(Real n, int k_max, const MomentOptions& options);

    /// Pairwise |a - b| between the methods present in a row, labelled "a-b".
    static std::vector<std::pair<std::string, Real>> discrepancies(const MomentRow& row);
};

struct VerifyConfig {
    int n = 3;
    int k_max = 5;
    Real gauge_theta = 1.0L;
    MomentOptions moments;
};

/// max |G_a - G_b| over `points` equispaced z on the unit circle, for each pair of forms.
std::vector<Check> form_agreement_checks(const LawParams& params, int points, Real tol);

/// Recurrence residuals, Askey-Wilson mass and orthogonality, Poisson positivity and
/// the trace identity tr(D M^m) = int (2x)^m P_{q^2}(x, x) d mu for m <= 8, at phase u.
std::vector<Check> orthogonal_polynomial_checks(Real q, Complex u);

/// Smallest eigenvalue of the Hankel matrix [m_{i+j}], 0 <= i, j <= size-1, of the
/// closed-form moments must be >= -tol * scale.
Check hankel_check(const LawParams& params, int size, Real tol);

/// Full cross-check suite. Every check runs; failures are collected, not thrown.
std::vector<Check> run_verify(const VerifyConfig& config);

bool all_pass(const std::vector<Check>& checks);

}  // namespace freeo
