#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace freeo {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored low degree first and kept trimmed, so the zero
/// polynomial has no coefficients and equality is plain vector equality.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT(google-explicit-constructor)
    Polynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
    Polynomial(std::initializer_list<long> coeffs_low_first);
    explicit Polynomial(std::vector<Integer> coeffs_low_first);

    /// The indeterminate itself.
    static Polynomial x();
    static Polynomial monomial(const Integer& c, int degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Integer& leading() const;
    const Integer& coeff(int i) const;
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Polynomial divided by its content, with positive leading coefficient.
    Polynomial primitive_part() const;

    Rational evaluate(const Rational& at) const;
    Integer evaluate(const Integer& at) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Integer& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& b) { return a *= b; }
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Render in descending powers of `var`, e.g. "n^2 + 3*n - 1".
    std::string to_string(const std::string& var = "n") const;

  private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Quotient a / b; throws InputError unless b divides a exactly in Z[x].
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);
/// Divide every coefficient by c; throws InputError unless exact.
Polynomial exact_quotient(const Polynomial& a, const Integer& c);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);
/// Greatest common divisor in Z[x], positive leading coefficient.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: gcd(num, den) = 1 in Z[x], the denominator has positive
/// leading coefficient, and the integer content shared by numerator and
/// denominator is 1. Every rational function has exactly one such form.
class RationalFunction {
  public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction indeterminate() { return RationalFunction(Polynomial::x()); }

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    /// Throws DomainError when `at` is a pole.
    Rational evaluate(const Rational& at) const;

    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend RationalFunction operator-(RationalFunction a);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "n") const;

  private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace freeo
