#include <doctest.h>

#include <random>

#include "freeo/errors.hpp"
#include "freeo/polynomial.hpp"

using namespace freeo;

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    return Polynomial(std::move(c));
}

const Polynomial n = Polynomial::x();

}  // namespace

TEST_CASE("polynomial basics") {
    Polynomial p{-1, 3, 1};  // n^2 + 3n - 1
    CHECK(p.degree() == 2);
    CHECK(p.leading() == 1);
    CHECK(p.to_string() == "n^2 + 3*n - 1");
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK((-p).to_string() == "-n^2 - 3*n + 1");
    CHECK(p.evaluate(Integer(2)) == 9);
    CHECK(p.evaluate(Rational(1, 2)) == Rational(3, 4));
    CHECK(Polynomial{6, 4, 2}.content() == 2);
    CHECK(Polynomial{-6, -4, -2}.primitive_part() == Polynomial{3, 2, 1});
    CHECK((n + 1) * (n - 1) == Polynomial{-1, 0, 1});
}

TEST_CASE("exact quotient and gcd") {
    const Polynomial a = (n - 1) * (n + 2) * (n * n + 1);
    const Polynomial b = (n - 1) * (n + 3);
    CHECK(gcd(a, b) == n - 1);
    CHECK(exact_quotient(a, n - 1) == (n + 2) * (n * n + 1));
    CHECK_THROWS_AS(exact_quotient(a, n + 5), InputError);
    CHECK(exact_quotient(Polynomial{4, 6}, Integer(2)) == Polynomial{2, 3});
    CHECK_THROWS_AS(exact_quotient(Polynomial{4, 5}, Integer(2)), InputError);
    CHECK(gcd(Polynomial{2, 4}, Polynomial{6}) == Polynomial(2));
}

TEST_CASE("polynomial ring properties on random inputs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = random_poly(rng, 6), b = random_poly(rng, 5), c = random_poly(rng, 4);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (b.is_zero()) continue;
        CHECK(exact_quotient(a * b, b) == a);
        const Polynomial g = gcd(a * c, b * c);
        if (!c.is_zero()) {
            CHECK(exact_quotient(a * c, g) * g == a * c);
            CHECK(exact_quotient(b * c, g) * g == b * c);
            CHECK(exact_quotient(g, c.primitive_part()).degree() >= 0);
        }
        const Rational at(trial - 100, 7);
        CHECK((a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at));
    }
}

TEST_CASE("rational function canonical form") {
    const RationalFunction r((2 * 1) * (n + 1) * Polynomial(2), Polynomial(4) * (n + 1));
    CHECK(r == RationalFunction(1));
    const RationalFunction s(-n, -n - 1);
    CHECK(s.numerator() == n);
    CHECK(s.denominator() == n + 1);
    CHECK(s.to_string() == "n/(n + 1)");
    CHECK(RationalFunction(n + 2, n).to_string() == "(n + 2)/n");
    CHECK(RationalFunction(Polynomial{3, 6}, Polynomial{4}).to_string() == "(6*n + 3)/4");
    CHECK(RationalFunction(Rational(-3, 6)).to_string() == "-1/2");
    CHECK_THROWS_AS(RationalFunction(n, Polynomial()), DomainError);
}

TEST_CASE("rational function arithmetic matches pointwise evaluation") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial d1 = random_poly(rng, 3), d2 = random_poly(rng, 3);
        if (d1.is_zero() || d2.is_zero()) continue;
        const RationalFunction f(random_poly(rng, 4), d1), g(random_poly(rng, 4), d2);
        const Rational at(2 * trial + 101, 13);
        if (d1.evaluate(at) == 0 || d2.evaluate(at) == 0) continue;
        CHECK((f + g).evaluate(at) == f.evaluate(at) + g.evaluate(at));
        CHECK((f - g).evaluate(at) == f.evaluate(at) - g.evaluate(at));
        CHECK((f * g).evaluate(at) == f.evaluate(at) * g.evaluate(at));
        if (!g.is_zero() && g.evaluate(at) != 0) CHECK((f / g).evaluate(at) == f.evaluate(at) / g.evaluate(at));
        CHECK(f - f == RationalFunction(0));
    }
}

TEST_CASE("rational function evaluation at a pole") {
    const RationalFunction f(n + 2, n * (n + 1));
    CHECK(f.evaluate(Rational(1)) == Rational(3, 2));
    CHECK_THROWS_AS(f.evaluate(Rational(0)), DomainError);
    CHECK_THROWS_AS(f.evaluate(Rational(-1)), DomainError);
    // A removable factor cancels and no longer counts as a pole.
    CHECK(RationalFunction((n - 2) * (n + 1), n - 2).evaluate(Rational(2)) == 3);
    CHECK_THROWS_AS(RationalFunction(1) / RationalFunction(0), DomainError);
}
