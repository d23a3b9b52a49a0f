#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "freeo/errors.hpp"
#include "freeo/polynomial.hpp"
#include "freeo/real.hpp"

namespace freeo {

enum class ScalarKind { Rational, RationalFunction };

/// Exact scalar: a reduced rational number or a reduced rational function of one
/// indeterminate. Arithmetic never coerces between the two kinds.
class Scalar {
  public:
    Scalar() : value_(Rational(0)) {}
    Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational v) : value_(std::move(v)) { std::get<Rational>(value_).canonicalize(); }  // NOLINT(google-explicit-constructor)
    Scalar(RationalFunction v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    static Scalar zero(ScalarKind kind);
    static Scalar one(ScalarKind kind);

    ScalarKind kind() const noexcept {
        return std::holds_alternative<Rational>(value_) ? ScalarKind::Rational : ScalarKind::RationalFunction;
    }
    bool is_zero() const;

    /// Throws MixedScalarError when the scalar holds the other kind.
    const Rational& rational() const;
    const RationalFunction& rational_function() const;

    /// Canonical text form; equal scalars print identically.
    std::string to_string() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

  private:
    std::variant<Rational, RationalFunction> value_;
};

/// Raised when an exact matrix has no inverse; carries the (zero) determinant.
class SingularMatrixError : public Error {
  public:
    SingularMatrixError(const std::string& what, Scalar det) : Error(what), det_(std::move(det)) {}
    const Scalar& determinant() const noexcept { return det_; }

  private:
    Scalar det_;
};

/// Dense row-major matrix of exact scalars, all of one kind.
class ExactMatrix {
  public:
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    /// rows x cols matrix of zeros of the given kind.
    ExactMatrix(std::size_t rows, std::size_t cols, ScalarKind kind);

    static ExactMatrix identity(std::size_t size, ScalarKind kind);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    ScalarKind kind() const noexcept { return kind_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Scalar v);
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    ExactMatrix transpose() const;
    /// Sum of all entries.
    Scalar entry_sum() const;
    /// Substitute a rational value for the indeterminate of a rational-function matrix.
    ExactMatrix evaluate_at(const Rational& at) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    ScalarKind kind_;
    std::vector<Scalar> entries_;
};

/// Exact determinant by Bareiss fraction-free elimination.
Scalar determinant(const ExactMatrix& m);

/// Exact inverse; throws SingularMatrixError (determinant 0) when none exists.
ExactMatrix invert(const ExactMatrix& m);

/// Exact solution X of m * X = rhs; throws SingularMatrixError when m is singular.
ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& rhs);

/// Result of fraction-free Gauss-Jordan elimination over the integers:
/// `a * solution = det * rhs`, with `det` the true determinant of `a`.
struct IntegerSolution {
    Integer det;
    std::vector<Integer> solution;  // row-major, rows(a) x cols(rhs)
};

/// Integer-matrix solve without ever leaving Z. Entries row-major; `a` is size x size,
/// `rhs` is size x rhs_cols. When `a` is singular, returns det == 0 and an empty solution.
IntegerSolution solve_integer(std::vector<Integer> a, std::vector<Integer> rhs, std::size_t size,
                              std::size_t rhs_cols);

/// Rational rounded to the nearest long double.
Real to_real(const Rational& v);

}  // namespace freeo
