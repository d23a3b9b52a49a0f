#include "freeo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>

#include <Eigen/Eigenvalues>

#include "freeo/errors.hpp"
#include "freeo/exact_linalg.hpp"
#include "freeo/suq2_oracle.hpp"
#include "freeo/weingarten.hpp"

namespace freeo {

namespace {

constexpr Real kPairwiseTol = 1e-8L;
constexpr Real kGaugeTol = 1e-12L;
constexpr Real kGeneralFTol = 1e-10L;
constexpr Real kFormTol = 1e-12L;
constexpr int kFormPoints = 1000;

using RealMatrixL = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

std::string order_label(const char* what, int two_k) { return std::string(what) + "_" + std::to_string(two_k); }

// Runs `body`; an exception becomes a failed check carrying the message.
void guarded(std::vector<Check>& out, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        out.push_back(condition(name, std::string("error: ") + e.what(), 0, 0, false));
    }
}

std::vector<Real> theta_nodes(int intervals) {
    std::vector<Real> t;
    for (int j = 1; j < intervals; ++j) t.push_back(kPi * static_cast<Real>(j) / static_cast<Real>(intervals));
    return t;
}

void append_boundary_checks(std::vector<Check>& out, const VerifyConfig& config) {
    guarded(out, "gram_det_k3_N2_zero", [&] {
        const Scalar det = determinant(gram_matrix(GramSpec::numeric(3, Rational(2))));
        out.push_back(condition("gram_det_k3_N2_zero", "bareiss_determinant", to_real(det.rational()), 0, det.is_zero()));
    });
    guarded(out, "moment_uij_2_6_singular", [&] {
        bool raised = false;
        Real value = 0;
        try {
            value = to_real(moment_uij(2, 6));
        } catch (const SingularMatrixError&) {
            raised = true;
        }
        out.push_back(condition("moment_uij_2_6_singular", "moment_uij", value, 0, raised));
    });
    const int k_top = std::min({config.k_max, kSymbolicCap, exact_cap()});
    for (int k = 1; k <= k_top; ++k) {
        const std::string name = order_label("symbolic_at_2_vs_exact", 2 * k);
        guarded(out, name, [&] {
            const Rational symbolic = moment_rational_in_n(2 * k).evaluate(Rational(2));
            bool same = false;
            Real exact_value = 0;
            try {
                const Rational exact = moment_uij(2, 2 * k);
                exact_value = to_real(exact);
                same = exact == symbolic;
            } catch (const SingularMatrixError&) {
                same = true;  // singular Gram: only the continuation is available
            }
            out.push_back(condition(name, "symbolic_eval", to_real(symbolic), exact_value, same));
        });
    }
    if (config.k_max >= 3) {
        guarded(out, "symbolic_M6_at_2", [&] {
            const Rational v = moment_rational_in_n(6).evaluate(Rational(2));
            out.push_back(condition("symbolic_M6_at_2", "symbolic_eval", to_real(v), 16, v == 16));
        });
    }
}

}  // namespace

Check compare(std::string check, std::string method_a, Real value_a, std::string method_b, Real value_b, Real tol,
              bool relative) {
    Check c;
    c.check = std::move(check);
    c.method_a = std::move(method_a);
    c.method_b = std::move(method_b);
    c.value_a = value_a;
    c.value_b = value_b;
    c.abs_diff = std::abs(value_a - value_b);
    c.tolerance = relative ? tol * std::max(Real(1), std::abs(value_b)) : tol;
    c.pass = c.abs_diff <= c.tolerance;
    return c;
}

Check condition(std::string check, std::string method_a, Real observed, Real expected, bool pass) {
    Check c;
    c.check = std::move(check);
    c.method_a = std::move(method_a);
    c.method_b = "expected";
    c.value_a = observed;
    c.value_b = expected;
    c.abs_diff = std::abs(observed - expected);
    c.tolerance = 0;
    c.pass = pass;
    return c;
}

MomentReport MomentReport::build(Real n, int k_max, const MomentOptions& opt) {
    if (k_max < 1) throw InputError("k_max must be at least 1");
    MomentReport report;
    report.n = n;
    const bool integer_n = n >= 1 && std::floor(n) == n && n < 1e9L;
    const bool interior = n > 2;
    std::optional<LawParams> params;
    if (interior) params = LawParams::from_n(n, opt.series_eps, opt.precision_bits);

    std::vector<Real> quad;
    if (interior && opt.density_quadrature) quad = quadrature_moments(*params, k_max, std::max(opt.grid, 4 * k_max + 16));

    for (int order = 1; order <= 2 * k_max; ++order) {
        MomentRow row;
        row.two_k = order;
        if (order % 2 != 0) {
            if (opt.exact && integer_n) row.weingarten_exact = Rational(0);
            if (interior) {
                if (opt.closed_form) row.closed_form = 0;
                if (opt.operator_trace) row.operator_trace = 0;
                if (opt.density_quadrature) row.density_quadrature = 0;
            }
            report.rows.push_back(std::move(row));
            continue;
        }
        const int k = order / 2;
        if (opt.exact && integer_n && k <= exact_cap()) row.weingarten_exact = moment_uij(static_cast<int>(n), order);
        if (interior) {
            if (opt.closed_form) row.closed_form = closed_moment(*params, k);
            if (opt.operator_trace) {
                const int u_points = opt.u_points > 0 ? opt.u_points : 2 * k + 1;
                row.operator_trace = haar_trace_moment(*params, k, opt.trunc_K, u_points);
            }
            if (opt.density_quadrature) row.density_quadrature = quad[static_cast<std::size_t>(order)];
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<std::pair<std::string, Real>> MomentReport::discrepancies(const MomentRow& row) {
    std::vector<std::pair<std::string, Real>> values;
    if (row.weingarten_exact) values.emplace_back("weingarten_exact", to_real(*row.weingarten_exact));
    if (row.closed_form) values.emplace_back("closed_form", *row.closed_form);
    if (row.operator_trace) values.emplace_back("operator_trace", *row.operator_trace);
    if (row.density_quadrature) values.emplace_back("density_quadrature", *row.density_quadrature);
    std::vector<std::pair<std::string, Real>> out;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            out.emplace_back(values[i].first + "-" + values[j].first, std::abs(values[i].second - values[j].second));
    return out;
}

std::vector<Check> form_agreement_checks(const LawParams& params, int points, Real tol) {
    Real fp = 0, ps = 0, fs = 0;
    for (int j = 0; j < points; ++j) {
        const Complex z = std::polar(Real(1), 2 * kPi * static_cast<Real>(j) / static_cast<Real>(points));
        const Complex f = density_G(z, params, DensityForm::FactoredSeries);
        const Complex p = density_G(z, params, DensityForm::PoleSum);
        const Complex s = density_G(z, params, DensityForm::PowerSeries);
        fp = std::max(fp, std::abs(f - p));
        ps = std::max(ps, std::abs(p - s));
        fs = std::max(fs, std::abs(f - s));
    }
    return {compare("G_forms_factored_vs_pole_sum", "max_abs_diff", fp, "zero", 0, tol, false),
            compare("G_forms_pole_sum_vs_power_series", "max_abs_diff", ps, "zero", 0, tol, false),
            compare("G_forms_factored_vs_power_series", "max_abs_diff", fs, "zero", 0, tol, false)};
}

std::vector<Check> orthogonal_polynomial_checks(Real q, Complex u) {
    std::vector<Check> out;
    const Gauge gauge = Gauge::standard(q);
    const ASCParams asc = ASCParams::from_gauge(gauge, u, q);

    Real residual = 0;
    for (Real x : {-0.95L, -0.5L, -0.1L, 0.3L, 0.77L, 0.99L}) {
        const auto seq = asc_sequence(31, x, asc);
        const Complex s = asc.a + asc.b;
        const Complex ab = asc.a * asc.b;
        for (int k = 0; k <= 30; ++k) {
            const Real qk = std::pow(q, static_cast<Real>(k));
            const Complex lower =
                k == 0 ? Complex(0) : (1 - qk) * (Real(1) - ab * qk / q) * seq[static_cast<std::size_t>(k) - 1];
            const Complex r = Real(2) * x * seq[static_cast<std::size_t>(k)] - seq[static_cast<std::size_t>(k) + 1] -
                              qk * s * seq[static_cast<std::size_t>(k)] - lower;
            residual = std::max(residual, std::abs(r));
        }
    }
    out.push_back(compare("asc_recurrence_residual", "max_abs_residual", residual, "zero", 0, 1e-12L, false));

    // Trapezoid over theta in [0, pi]; the weight vanishes at both ends.
    const auto nodes = theta_nodes(1024);
    const Real h = kPi / 1024;
    constexpr int kDegree = 8;
    std::vector<std::vector<Complex>> q_values;
    std::vector<Real> weights, poisson;
    q_values.reserve(nodes.size());
    for (Real t : nodes) {
        const Real x = std::cos(t);
        q_values.push_back(asc_sequence(kDegree, x, asc));
        weights.push_back(aw_weight(x, asc) * h);
        poisson.push_back(poisson_diag(x, q * q, asc));
    }

    Real mass = 0;
    for (Real w : weights) mass += w;
    out.push_back(compare("aw_total_mass", "trapezoid", mass, "one", 1, 1e-8L, false));

    Real ortho = 0;
    for (int j = 0; j <= kDegree; ++j)
        for (int k = 0; k <= j; ++k) {
            Complex integral = 0;
            for (std::size_t i = 0; i < nodes.size(); ++i)
                integral += q_values[i][static_cast<std::size_t>(j)] * std::conj(q_values[i][static_cast<std::size_t>(k)]) *
                            weights[i];
            const Real expected = j == k ? asc_norm(k, asc) : 0;
            ortho = std::max(ortho, std::abs(integral - expected));
        }
    out.push_back(compare("aw_orthogonality", "max_abs_error", ortho, "zero", 0, 1e-8L, false));

    const Real min_weight = *std::min_element(weights.begin(), weights.end());
    const Real min_poisson = *std::min_element(poisson.begin(), poisson.end());
    out.push_back(condition("aw_weight_positive", "grid_min", min_weight, 0, min_weight > 0));
    out.push_back(condition("poisson_diag_positive", "grid_min", min_poisson, 0, min_poisson > 0));

    const TridiagonalModel model(60, q, gauge, u);
    const auto traces = model.weighted_trace_powers(kDegree);
    for (int m = 0; m <= kDegree; ++m) {
        Real integral = 0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            integral += std::pow(2 * std::cos(nodes[i]), static_cast<Real>(m)) * poisson[i] * weights[i];
        out.push_back(compare(order_label("trace_identity", m), "tr_D_M^m", traces[static_cast<std::size_t>(m)].real(),
                              "poisson_integral", integral, 1e-7L, true));
    }
    return out;
}

Check hankel_check(const LawParams& params, int size, Real tol) {
    RealMatrixL h(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) h(i, j) = closed_moment(params, i + j);
    Eigen::SelfAdjointEigenSolver<RealMatrixL> eig(h, Eigen::EigenvaluesOnly);
    const Real smallest = eig.eigenvalues().minCoeff();
    const Real scale = eig.eigenvalues().cwiseAbs().maxCoeff();
    return condition("hankel_psd_min_eigenvalue", "closed_form", smallest, 0, smallest >= -tol * scale);
}

std::vector<Check> run_verify(const VerifyConfig& config) {
    if (config.k_max < 1) throw InputError("k_max must be at least 1");
    if (config.n < 2) throw DomainError("verify needs integer n >= 2");
    std::vector<Check> out;
    if (config.n == 2) {
        append_boundary_checks(out, config);
        return out;
    }

    const LawParams params = LawParams::from_n(config.n, config.moments.series_eps, config.moments.precision_bits);
    guarded(out, "moment_report", [&] {
        const MomentReport report = MomentReport::build(config.n, config.k_max, config.moments);
        for (const auto& row : report.rows) {
            std::vector<std::pair<std::string, Real>> values;
            if (row.weingarten_exact) values.emplace_back("weingarten_exact", to_real(*row.weingarten_exact));
            if (row.closed_form) values.emplace_back("closed_form", *row.closed_form);
            if (row.operator_trace) values.emplace_back("operator_trace", *row.operator_trace);
            if (row.density_quadrature) values.emplace_back("density_quadrature", *row.density_quadrature);
            if (row.two_k % 2 != 0) {
                bool zero = true;
                for (const auto& [name, v] : values) zero = zero && v == 0;
                out.push_back(condition(order_label("odd_moment_zero", row.two_k), "all_methods", 0, 0, zero));
                continue;
            }
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j)
                    out.push_back(compare(order_label("moment", row.two_k), values[i].first, values[i].second,
                                          values[j].first, values[j].second, kPairwiseTol, true));
            if (row.weingarten_exact && *row.weingarten_exact <= 0)
                out.push_back(condition(order_label("moment_positive", row.two_k), "weingarten_exact",
                                        to_real(*row.weingarten_exact), 0, false));
        }
    });

    const int exact_top = std::min(config.k_max, exact_cap());
    for (int k = 1; k <= std::min(exact_top, kSymbolicCap); ++k) {
        const std::string name = order_label("symbolic_vs_exact", 2 * k);
        guarded(out, name, [&] {
            const Rational symbolic = moment_rational_in_n(2 * k).evaluate(Rational(config.n));
            const Rational exact = moment_uij(config.n, 2 * k);
            out.push_back(condition(name, "symbolic_eval", to_real(symbolic), to_real(exact), symbolic == exact));
        });
    }

    for (int k = 1; k <= exact_top; ++k) {
        const std::string name = order_label("general_F_vs_exact", 2 * k);
        guarded(out, name, [&] {
            const Real f = general_F_moment(suq2_parameter_matrix(params.q), 2 * k);
            out.push_back(compare(name, "general_F", f, "weingarten_exact", to_real(moment_uij(config.n, 2 * k)),
                                  kGeneralFTol, true));
        });
    }

    const int trunc_K = config.moments.trunc_K;
    for (int k = 1; k <= config.k_max; ++k) {
        const std::string name = order_label("gauge_invariance", 2 * k);
        guarded(out, name, [&] {
            const int u_points = config.moments.u_points > 0 ? config.moments.u_points : 2 * k + 1;
            const Real base = haar_trace_moment(params, k, trunc_K, u_points, Gauge::standard(params.q));
            const Real rotated =
                haar_trace_moment(params, k, trunc_K, u_points, Gauge::rotated(params.q, config.gauge_theta));
            out.push_back(compare(name, "rotated_gauge", rotated, "standard_gauge", base, kGaugeTol, true));
        });
        const std::string doubled = order_label("u_quadrature_doubling", 2 * k);
        guarded(out, doubled, [&] {
            const Real base = haar_trace_moment(params, k, trunc_K, 2 * k + 1);
            const Real fine = haar_trace_moment(params, k, trunc_K, 4 * k + 2);
            out.push_back(compare(doubled, "u_points_4k+2", fine, "u_points_2k+1", base, 1e-13L, true));
        });
    }

    guarded(out, "G_forms", [&] {
        for (auto& c : form_agreement_checks(params, kFormPoints, kFormTol)) out.push_back(std::move(c));
    });
    guarded(out, "density_nonnegative", [&] {
        Real smallest = 0;
        for (int j = 0; j <= 10'000; ++j) smallest = std::min(smallest, density_F(kPi * j / 10'000, params));
        out.push_back(condition("density_nonnegative", "grid_min", smallest, 0, smallest >= -1e-10L));
    });
    guarded(out, "density_table_mass", [&] {
        out.push_back(compare("density_table_mass", "trapezoid", table_mass(density_table(params, 2000)), "one", 1,
                              1e-6L, false));
    });
    guarded(out, "hankel_psd", [&] { out.push_back(hankel_check(params, 4, 1e-12L)); });
    guarded(out, "orthogonal_polynomials", [&] {
        for (auto& c : orthogonal_polynomial_checks(params.q, std::polar(Real(1), Real(0.7)))) out.push_back(std::move(c));
    });
    return out;
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace freeo
