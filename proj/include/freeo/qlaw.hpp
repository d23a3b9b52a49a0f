#pragma once

#include <iosfwd>
#include <vector>

#include "freeo/polynomial.hpp"
#include "freeo/real.hpp"

namespace freeo {

inline constexpr Real kDefaultSeriesEps = 1e-30L;
inline constexpr int kDefaultPrecisionBits = 80;

/// Root of q^2 + n q + 1 = 0 in [-1, 0). `boundary` marks n = 2, where q = -1
/// and the q-series below are undefined.
struct QRoot {
    Real q;
    bool boundary;
};

/// Stable form q = -2 / (n + sqrt(n^2 - 4)). Throws DomainError for n < 2.
QRoot q_from_n(Real n);

/// Deformation data for the law of w = sqrt(n+2) u_ij.
struct LawParams {
    Real n;
    Real q;
    int precision_bits = kDefaultPrecisionBits;
    Real series_eps = kDefaultSeriesEps;
    bool boundary = false;

    /// Validates n >= 2, the q relation, and that the requested precision is
    /// available (the extended 80-bit format is the widest supported).
    static LawParams from_n(Real n, Real series_eps = kDefaultSeriesEps, int precision_bits = kDefaultPrecisionBits);
};

/// Equivalent expressions of G, with F(z) = (G(z) + G(1/z)) / 2 the circular density.
enum class DensityForm {
    FactoredSeries,  // (1-q^2)(1-z^4) sum_k q^2k (1-q^(2k+1) z^2) / prod_{j=0..2} (1 + q^(2k+j) z^2)
    PoleSum,         // ((1+q)/(1-q)) (1 - z^2 + 2(1-z^4) sum_k (-1)^k q^k / (1 + q^k z^2))
    PowerSeries,     // 1 + 2 sum_r (-1)^r q^(r-1)(1+q)^2 / ((1+q^(r+1))(1+q^(r-1))) z^(2r)
};

const char* to_string(DensityForm form);

/// G(z) for |z| = 1. Series are summed until a term falls below series_eps
/// (at least 8 terms). Throws InputError off the unit circle and DomainError at n = 2.
Complex density_G(Complex z, const LawParams& params, DensityForm form);

/// Circular density F(e^{it}) of w.
Real density_F(Real t, const LawParams& params, DensityForm form = DensityForm::FactoredSeries);

/// Circular density of the standard semicircle law, 1 - cos 2t.
Real semicircle_circular_density(Real t);

/// Even moment E[w^(2k)] from the closed binomial sum.
Real closed_moment(const LawParams& params, int k);

/// E[w^order]; odd orders are exactly 0.
Real moment(const LawParams& params, int order);

/// The closed binomial sum evaluated exactly in Q(sqrt(n^2 - 4)) for integer n >= 3.
/// The irrational part cancels; throws Error if it does not.
Rational closed_moment_exact(int n, int k);

/// Moments E[w^m], m = 0..2*k_max, by the periodic trapezoidal rule with `grid`
/// subintervals of [0, pi] applied to (1/pi) int F(e^{it}) (2 cos t)^m dt.
/// Odd entries are exactly 0. Requires grid >= 4*k_max + 16.
std::vector<Real> quadrature_moments(const LawParams& params, int k_max, int grid,
                                     DensityForm form = DensityForm::FactoredSeries);

struct DensityPoint {
    Real x;
    Real density;
};

/// Real-line density of the unnormalized u_ij on [-2/sqrt(n+2), 2/sqrt(n+2)],
/// sampled at x = 2 cos t / sqrt(n+2) for `points` uniform t in [0, pi], increasing x.
/// Interior values are F(e^{it}) sqrt(n+2) / (2 pi sin t); the endpoints are 0.
std::vector<DensityPoint> density_table(const LawParams& params, int points);

/// Trapezoidal integral of a density table over x.
Real table_mass(const std::vector<DensityPoint>& table);

/// CSV with header "x,density", 12 significant digits, '.' decimal separator.
void write_density_csv(std::ostream& out, const std::vector<DensityPoint>& table);

/// "%.12Lg" independent of the global locale.
std::string format_real(Real v, int digits = 12);

}  // namespace freeo
