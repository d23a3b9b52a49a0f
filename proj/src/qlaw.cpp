#include "freeo/qlaw.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "freeo/errors.hpp"

namespace freeo {

namespace {

constexpr int kMinSeriesTerms = 8;
constexpr int kMaxSeriesTerms = 2'000'000;
constexpr Real kUnitCircleTol = 1e-12L;

void require_interior(const LawParams& p) {
    if (p.boundary || !(p.q > -1 && p.q < 0))
        throw DomainError("q-series are undefined at the boundary n = 2 (q = -1); use the symbolic moments instead");
}

bool series_done(int terms, Real term_mag, Real eps) { return terms >= kMinSeriesTerms && term_mag < eps; }

[[noreturn]] void no_convergence(const char* what) {
    throw ConvergenceError(std::string(what) + " did not reach series_eps within " + std::to_string(kMaxSeriesTerms) +
                           " terms");
}

Complex g_factored(Complex z, const LawParams& p) {
    const Real q = p.q;
    const Complex z2 = z * z;
    // The k = 0 factor 1/(1+z^2) cancels against 1 - z^4 = (1-z^2)(1+z^2).
    Complex head = (Real(1) - q * z2) / ((Real(1) + q * z2) * (Real(1) + q * q * z2));
    Complex tail = 0;
    Real q2k = q * q;  // q^(2k) for k = 1
    for (int k = 1;; ++k) {
        const Complex term = q2k * (Real(1) - q2k * q * z2) /
                             ((Real(1) + q2k * z2) * (Real(1) + q2k * q * z2) * (Real(1) + q2k * q * q * z2));
        tail += term;
        if (series_done(k, std::abs(term), p.series_eps)) break;
        if (k > kMaxSeriesTerms) no_convergence("factored series");
        q2k *= q * q;
    }
    return (Real(1) - q * q) * (Real(1) - z2) * (head + (Real(1) + z2) * tail);
}

Complex g_pole_sum(Complex z, const LawParams& p) {
    const Real q = p.q;
    const Complex z2 = z * z;
    Complex sum = 0;
    Real qk = q;
    for (int k = 1;; ++k) {
        const Real sign = (k % 2 == 0) ? 1 : -1;
        const Complex term = sign * qk / (Real(1) + qk * z2);
        sum += term;
        if (series_done(k, std::abs(term), p.series_eps)) break;
        if (k > kMaxSeriesTerms) no_convergence("pole sum");
        qk *= q;
    }
    return (1 + q) / (1 - q) * (Real(1) - z2 + Real(2) * (Real(1) - z2 * z2) * sum);
}

Complex g_power_series(Complex z, const LawParams& p) {
    const Real q = p.q;
    const Complex z2 = z * z;
    const Real lead = (1 + q) * (1 + q);
    Complex sum = 1;
    Complex z2r = 1;
    Real q_rm1 = 1;  // q^(r-1)
    for (int r = 1;; ++r) {
        z2r *= z2;
        const Real sign = (r % 2 == 0) ? 1 : -1;
        const Real coeff = sign * q_rm1 * lead / ((1 + q_rm1 * q * q) * (1 + q_rm1));
        const Complex term = Real(2) * coeff * z2r;
        sum += term;
        if (series_done(r, std::abs(term), p.series_eps)) break;
        if (r > kMaxSeriesTerms) no_convergence("power series");
        q_rm1 *= q;
    }
    return sum;
}

Real binomial(int m, int j) {
    if (j < 0 || j > m) return 0;
    j = std::min(j, m - j);
    Real b = 1;
    for (int i = 1; i <= j; ++i) b = b * static_cast<Real>(m - j + i) / static_cast<Real>(i);
    return std::round(b);
}

// a + b sqrt(d) with rational a, b and a fixed non-square integer d.
struct Quadratic {
    Rational a, b;
};

Quadratic mul(const Quadratic& x, const Quadratic& y, const Integer& d) {
    return {x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a};
}

Quadratic inverse(const Quadratic& x, const Integer& d) {
    const Rational norm = x.a * x.a - x.b * x.b * d;
    if (norm == 0) throw DomainError("division by zero in Q(sqrt d)");
    return {x.a / norm, -x.b / norm};
}

}  // namespace

QRoot q_from_n(Real n) {
    if (!(n >= 2)) throw DomainError("q_from_n needs n >= 2, got " + format_real(n));
    if (n == 2) return {-1, true};
    return {-2 / (n + std::sqrt(n * n - 4)), false};
}

LawParams LawParams::from_n(Real n, Real series_eps, int precision_bits) {
    if (precision_bits < 1 || precision_bits > kDefaultPrecisionBits)
        throw InputError("precision_bits must be in 1..80 (extended precision is the widest supported format)");
    if (!(series_eps > 0)) throw InputError("series_eps must be positive");
    const QRoot root = q_from_n(n);
    LawParams p{n, root.q, precision_bits, series_eps, root.boundary};
    if (!root.boundary && !(std::abs(p.q + 1 / p.q + n) < 1e-14L * n))
        throw DomainError("q + 1/q = -n does not hold to working precision");
    return p;
}

const char* to_string(DensityForm form) {
    switch (form) {
        case DensityForm::FactoredSeries: return "factored_series";
        case DensityForm::PoleSum: return "pole_sum";
        case DensityForm::PowerSeries: return "power_series";
    }
    return "unknown";
}

Complex density_G(Complex z, const LawParams& params, DensityForm form) {
    if (!(std::abs(std::abs(z) - 1) <= kUnitCircleTol)) throw InputError("density_G needs |z| = 1");
    require_interior(params);
    switch (form) {
        case DensityForm::FactoredSeries: return g_factored(z, params);
        case DensityForm::PoleSum: return g_pole_sum(z, params);
        case DensityForm::PowerSeries: return g_power_series(z, params);
    }
    throw InputError("unknown density form");
}

Real density_F(Real t, const LawParams& params, DensityForm form) {
    const Complex z = std::polar(Real(1), t);
    return (density_G(z, params, form) + density_G(std::conj(z), params, form)).real() / 2;
}

Real semicircle_circular_density(Real t) { return 1 - std::cos(2 * t); }

Real closed_moment(const LawParams& params, int k) {
    if (k < 0) throw InputError("closed_moment needs k >= 0");
    require_interior(params);
    if (k == 0) return 1;
    const Real q = params.q;
    // The r and -r terms combine to (-1)^r C(2k+2, k+1+r) r (1-q^r)/(1+q^r); r = 0 contributes 0.
    Real sum = 0;
    Real qr = 1;
    for (int r = 1; r <= k + 1; ++r) {
        qr *= q;
        const Real sign = (r % 2 == 0) ? 1 : -1;
        sum += sign * binomial(2 * k + 2, k + 1 + r) * static_cast<Real>(r) * (1 - qr) / (1 + qr);
    }
    return (q + 1) / (q - 1) * sum / static_cast<Real>(k + 1);
}

Real moment(const LawParams& params, int order) {
    if (order < 0) throw InputError("moment order must be nonnegative");
    if (order % 2 != 0) return 0;
    return closed_moment(params, order / 2);
}

Rational closed_moment_exact(int n, int k) {
    if (n < 3) throw DomainError("closed_moment_exact needs integer n >= 3");
    if (k < 0) throw InputError("closed_moment_exact needs k >= 0");
    if (k == 0) return 1;
    const Integer d = Integer(n) * n - 4;
    const Quadratic one{1, 0};
    Rational half_n(-n, 2);
    half_n.canonicalize();
    const Quadratic q{half_n, Rational(1, 2)};

    Quadratic sum{0, 0};
    Quadratic qr = one;
    for (int r = 1; r <= k + 1; ++r) {
        qr = mul(qr, q, d);
        Integer c;
        mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k + 2), static_cast<unsigned long>(k + 1 + r));
        const Rational coeff = Rational((r % 2 == 0) ? c : Integer(-c)) * r;
        const Quadratic ratio = mul({1 - qr.a, -qr.b}, inverse({1 + qr.a, qr.b}, d), d);
        sum.a += coeff * ratio.a;
        sum.b += coeff * ratio.b;
    }
    const Quadratic prefactor = mul({q.a + 1, q.b}, inverse({q.a - 1, q.b}, d), d);
    Quadratic out = mul(prefactor, sum, d);
    if (out.b != 0) throw Error("closed moment has a nonzero irrational part");
    return out.a / (k + 1);
}

std::vector<Real> quadrature_moments(const LawParams& params, int k_max, int grid, DensityForm form) {
    if (k_max < 0) throw InputError("quadrature_moments needs k_max >= 0");
    if (grid < 4 * k_max + 16)
        throw InputError("quadrature grid " + std::to_string(grid) + " below minimum " + std::to_string(4 * k_max + 16));
    require_interior(params);
    std::vector<Real> out(static_cast<std::size_t>(2 * k_max) + 1, 0);
    const Real h = kPi / static_cast<Real>(grid);
    for (int j = 0; j <= grid; ++j) {
        const Real t = h * static_cast<Real>(j);
        const Real weight = (j == 0 || j == grid) ? Real(0.5) : Real(1);
        const Real f = density_F(t, params, form) * weight * h / kPi;
        const Real w2 = 4 * std::cos(t) * std::cos(t);
        Real power = 1;
        for (int k = 0; k <= k_max; ++k) {
            out[static_cast<std::size_t>(2 * k)] += f * power;
            power *= w2;
        }
    }
    return out;
}

std::vector<DensityPoint> density_table(const LawParams& params, int points) {
    if (points < 2) throw InputError("density_table needs at least 2 points");
    require_interior(params);
    const Real scale = std::sqrt(params.n + 2);
    const int last = points - 1;
    std::vector<DensityPoint> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int j = 0; j <= last; ++j) {
        // Walk t from pi down to 0 so x increases; mirrored nodes share |cos t|.
        const int mirror = last - j;
        const Real t = kPi * static_cast<Real>(mirror) / static_cast<Real>(last);
        Real c = std::cos(kPi * static_cast<Real>(std::min(j, mirror)) / static_cast<Real>(last));
        if (mirror < j) c = -c;
        const Real x = mirror == j ? Real(0) : -2 * c / scale;
        Real rho = 0;
        if (j != 0 && j != last) rho = density_F(t, params) * scale / (2 * kPi * std::sin(t));
        out.push_back({x, rho});
    }
    return out;
}

Real table_mass(const std::vector<DensityPoint>& table) {
    Real mass = 0;
    for (std::size_t i = 1; i < table.size(); ++i)
        mass += (table[i].x - table[i - 1].x) * (table[i].density + table[i - 1].density) / 2;
    return mass;
}

std::string format_real(Real v, int digits) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

void write_density_csv(std::ostream& out, const std::vector<DensityPoint>& table) {
    out << "x,density\n";
    for (const auto& row : table) out << format_real(row.x) << ',' << format_real(row.density) << '\n';
}

}  // namespace freeo
