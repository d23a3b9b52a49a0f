#include <doctest.h>

#include <sstream>

#include "freeo/errors.hpp"
#include "freeo/exact_linalg.hpp"
#include "freeo/qlaw.hpp"
#include "freeo/weingarten.hpp"

using namespace freeo;

namespace {

Real rel_err(Real a, Real b) { return std::abs(a - b) / std::max(Real(1), std::abs(b)); }

Real sup_semicircle_distance(Real n) {
    const auto p = LawParams::from_n(n);
    Real sup = 0;
    for (int j = 0; j < 1000; ++j) {
        const Real t = kPi * j / 999;
        sup = std::max(sup, std::abs(density_F(t, p) - semicircle_circular_density(t)));
    }
    return sup;
}

}  // namespace

TEST_CASE("q from n") {
    const auto b = q_from_n(2);
    CHECK(b.q == -1);
    CHECK(b.boundary);
    const auto r = q_from_n(3);
    CHECK_FALSE(r.boundary);
    CHECK(std::abs(r.q - (std::sqrt(5.0L) - 3) / 2) < 1e-18L);
    CHECK(std::abs((r.q - 1) * (r.q - 1) / (1 + r.q * r.q) - 5.0L / 3) < 1e-18L);
    for (Real n : {2.001L, 3.0L, 7.5L, 50.0L, 1e6L}) {
        const Real q = q_from_n(n).q;
        CHECK(q > -1);
        CHECK(q < 0);
        CHECK(std::abs(q + 1 / q + n) < 1e-14L * n);
    }
    CHECK_THROWS_AS(q_from_n(1.5L), DomainError);
}

TEST_CASE("law parameters") {
    const auto p = LawParams::from_n(3);
    CHECK(p.series_eps == kDefaultSeriesEps);
    CHECK(p.precision_bits == 80);
    CHECK(LawParams::from_n(2).boundary);
    CHECK_THROWS_AS(LawParams::from_n(3, 1e-30L, 128), InputError);
    CHECK_THROWS_AS(LawParams::from_n(3, 0), InputError);
    CHECK_THROWS_AS(LawParams::from_n(1), DomainError);
}

TEST_CASE("the three forms of G agree") {
    for (Real n : {3.0L, 5.0L, 20.0L, 50.0L, 2.01L}) {
        const auto p = LawParams::from_n(n);
        Real worst = 0;
        for (int j = 0; j < 1000; ++j) {
            const Complex z = std::polar(Real(1), 2 * kPi * j / 1000);
            const Complex f = density_G(z, p, DensityForm::FactoredSeries);
            worst = std::max(worst, std::abs(f - density_G(z, p, DensityForm::PoleSum)));
            worst = std::max(worst, std::abs(f - density_G(z, p, DensityForm::PowerSeries)));
        }
        CHECK(worst < 1e-12L);
    }
    // z^2 = -1 is a removable singularity of the k = 0 term.
    const auto p = LawParams::from_n(3);
    const Complex i(0, 1);
    CHECK(std::abs(density_G(i, p, DensityForm::FactoredSeries) - density_G(i, p, DensityForm::PowerSeries)) < 1e-15L);
}

TEST_CASE("G: circle mean and small-q limit") {
    const auto p = LawParams::from_n(5);
    Complex mean = 0;
    for (int j = 0; j < 512; ++j) mean += density_G(std::polar(Real(1), 2 * kPi * j / 512), p, DensityForm::PoleSum);
    mean /= Real(512);
    CHECK(std::abs(mean - Complex(1)) < 1e-15L);

    const auto big = LawParams::from_n(1e8L);
    const Complex z = std::polar(Real(1), Real(0.4));
    CHECK(std::abs(density_G(z, big, DensityForm::FactoredSeries) - (Real(1) - z * z)) < 1e-7L);
}

TEST_CASE("G input validation") {
    const auto p = LawParams::from_n(3);
    CHECK_THROWS_AS(density_G(Complex(1.1L, 0), p, DensityForm::PowerSeries), InputError);
    CHECK_THROWS_AS(density_G(Complex(1, 0), LawParams::from_n(2), DensityForm::PowerSeries), DomainError);
    CHECK(std::string(to_string(DensityForm::PoleSum)) == "pole_sum");
}

TEST_CASE("circular density") {
    for (Real n : {3.0L, 5.0L, 20.0L, 50.0L}) {
        const auto p = LawParams::from_n(n);
        Real smallest = 1;
        for (int j = 0; j <= 10000; ++j) {
            const Real t = kPi * j / 10000;
            smallest = std::min(smallest, density_F(t, p));
            if (j % 500 == 0) CHECK(std::abs(density_F(t, p) - density_F(-t, p)) < 1e-17L);
        }
        CHECK(smallest >= -1e-10L);
    }
    const auto huge = LawParams::from_n(1e6L);
    Real dev = 0;
    for (int j = 0; j <= 1000; ++j) {
        const Real t = kPi * j / 1000;
        dev = std::max(dev, std::abs(density_F(t, huge) - semicircle_circular_density(t)));
    }
    CHECK(dev < 1e-5L);
}

TEST_CASE("closed moments") {
    const auto p = LawParams::from_n(3);
    const Real q = p.q;
    CHECK(closed_moment(p, 0) == 1);
    CHECK(rel_err(closed_moment(p, 1), (q - 1) * (q - 1) / (1 + q * q)) < 1e-17L);
    CHECK(rel_err(closed_moment(p, 2), 2 * std::pow(q - 1, 4) / ((q * q - q + 1) * (q * q + 1))) < 1e-17L);
    CHECK(rel_err(closed_moment(p, 3), std::pow(q - 1, 6) * (5 * q * q + 7 * q + 5) /
                                           ((1 + q * q) * (1 + std::pow(q, 4)) * (q * q - q + 1))) < 1e-17L);
    CHECK(rel_err(closed_moment(p, 1), 5.0L / 3) < 1e-17L);
    CHECK(rel_err(closed_moment(p, 2), 25.0L / 6) < 1e-17L);
    CHECK(rel_err(closed_moment(p, 3), 250.0L / 21) < 1e-17L);
    CHECK(moment(p, 7) == 0);
    CHECK(moment(p, 4) == closed_moment(p, 2));
    CHECK_THROWS_AS(closed_moment(p, -1), InputError);
    CHECK_THROWS_AS(closed_moment(LawParams::from_n(2), 1), DomainError);
}

TEST_CASE("exact closed moments and extended precision") {
    CHECK(closed_moment_exact(3, 0) == 1);
    CHECK(closed_moment_exact(3, 1) == Rational(5, 3));
    CHECK(closed_moment_exact(3, 3) == Rational(250, 21));
    CHECK(closed_moment_exact(4, 2) == Rational(18, 5));
    CHECK_THROWS_AS(closed_moment_exact(2, 1), DomainError);
    for (int n = 3; n <= 10; ++n) {
        const auto p = LawParams::from_n(n);
        for (int k = 1; k <= 7; ++k) CHECK(rel_err(closed_moment(p, k), to_real(closed_moment_exact(n, k))) < 1e-15L);
    }
}

TEST_CASE("quadrature moments") {
    for (int n : {3, 5, 10}) {
        const auto p = LawParams::from_n(n);
        const auto m = quadrature_moments(p, 7, 4096);
        REQUIRE(m.size() == 15);
        CHECK(std::abs(m[0] - 1) < 1e-10L);
        for (int k = 1; k <= 7; ++k) {
            CHECK(m[static_cast<std::size_t>(2 * k - 1)] == 0);
            CHECK(rel_err(m[static_cast<std::size_t>(2 * k)], closed_moment(p, k)) < 1e-9L);
        }
        for (int k = 1; k <= 6; ++k)
            CHECK(rel_err(m[static_cast<std::size_t>(2 * k)], to_real(moment_uij(n, 2 * k))) < 1e-9L);
        const auto pole = quadrature_moments(p, 3, 256, DensityForm::PoleSum);
        CHECK(rel_err(pole[6], closed_moment(p, 3)) < 1e-12L);
    }
    CHECK_THROWS_AS(quadrature_moments(LawParams::from_n(3), 5, 35), InputError);
    CHECK_NOTHROW(quadrature_moments(LawParams::from_n(3), 5, 36));
}

TEST_CASE("semicircle limit") {
    const Real d50 = sup_semicircle_distance(50), d100 = sup_semicircle_distance(100),
               d200 = sup_semicircle_distance(200);
    CHECK(d200 <= 0.02L);
    CHECK(d100 < d50);
    CHECK(d200 < d100);
    // Moments of 1 - cos 2t against (2 cos t)^{2k} are Catalan numbers.
    const Real catalan_numbers[] = {1, 1, 2, 5, 14, 42, 132};
    for (int k = 0; k <= 6; ++k) {
        Real sum = 0;
        const int grid = 256;
        for (int j = 0; j < grid; ++j) {
            const Real t = kPi * j / grid;
            sum += semicircle_circular_density(t) * std::pow(2 * std::cos(t), static_cast<Real>(2 * k));
        }
        CHECK(std::abs(sum / grid - catalan_numbers[k]) < 1e-10L);
    }
}

TEST_CASE("density table") {
    for (Real n : {50.0L, 20.0L, 5.0L, 3.0L}) {
        const auto p = LawParams::from_n(n);
        const auto t = density_table(p, 2000);
        REQUIRE(t.size() == 2000);
        const Real edge = 2 / std::sqrt(n + 2);
        CHECK(std::abs(t.front().x + edge) < 1e-18L);
        CHECK(std::abs(t.back().x - edge) < 1e-18L);
        CHECK(t.front().density == 0);
        CHECK(t.back().density == 0);
        CHECK(std::abs(table_mass(t) - 1) < 1e-6L);
        for (std::size_t i = 0; i < t.size(); ++i) {
            const auto& mirror = t[t.size() - 1 - i];
            REQUIRE(std::abs(t[i].x + mirror.x) < 1e-15L);
            REQUIRE(std::abs(t[i].density - mirror.density) < 1e-12L);
            REQUIRE(t[i].density >= -1e-10L);
            if (i > 0) REQUIRE(t[i].x > t[i - 1].x);
        }
    }
    CHECK_THROWS_AS(density_table(LawParams::from_n(3), 1), InputError);
    CHECK_THROWS_AS(density_table(LawParams::from_n(2), 10), DomainError);
}

TEST_CASE("density near the boundary stays bounded") {
    const auto p = LawParams::from_n(2.001L);
    const auto t = density_table(p, 2001);
    Real peak = 0;
    for (const auto& row : t) {
        CHECK(std::isfinite(static_cast<double>(row.density)));
        peak = std::max(peak, row.density * std::abs(row.x));
    }
    CHECK(peak < 1);
    CHECK(t[1000].x == 0);
    CHECK(std::abs(table_mass(t) - 1) < 1e-3L);
}

TEST_CASE("CSV output") {
    const auto t = density_table(LawParams::from_n(50), 3);
    std::ostringstream os;
    write_density_csv(os, t);
    CHECK(os.str().rfind("x,density\n-0.277350098113,0\n0,", 0) == 0);
    CHECK(format_real(1.0L / 3) == "0.333333333333");
    CHECK(format_real(1e-20L, 3) == "1e-20");
    CHECK(format_real(250.0L / 21) == "11.9047619048");
}
