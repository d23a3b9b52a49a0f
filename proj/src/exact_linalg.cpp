#include "freeo/exact_linalg.hpp"

#include <cmath>
#include <utility>

namespace freeo {

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(ScalarKind kind) {
    return kind == ScalarKind::Rational ? Scalar(Rational(0)) : Scalar(RationalFunction(0L));
}

Scalar Scalar::one(ScalarKind kind) {
    return kind == ScalarKind::Rational ? Scalar(Rational(1)) : Scalar(RationalFunction(1L));
}

bool Scalar::is_zero() const {
    return std::visit([](const auto& v) { return v == 0; }, value_);
}

const Rational& Scalar::rational() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return *r;
    throw MixedScalarError("scalar holds a rational function, not a rational");
}

const RationalFunction& Scalar::rational_function() const {
    if (const auto* r = std::get_if<RationalFunction>(&value_)) return *r;
    throw MixedScalarError("scalar holds a rational, not a rational function");
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Rational>(&value_)) return r->get_str();
    return std::get<RationalFunction>(value_).to_string();
}

namespace {

template <class Op>
void combine(std::variant<Rational, RationalFunction>& lhs, const std::variant<Rational, RationalFunction>& rhs,
             Op op) {
    if (lhs.index() != rhs.index()) throw MixedScalarError("arithmetic between a rational and a rational function");
    if (auto* r = std::get_if<Rational>(&lhs)) {
        op(*r, std::get<Rational>(rhs));
    } else {
        op(std::get<RationalFunction>(lhs), std::get<RationalFunction>(rhs));
    }
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& rhs) {
    combine(value_, rhs.value_, [](auto& a, const auto& b) { a += b; });
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    combine(value_, rhs.value_, [](auto& a, const auto& b) { a -= b; });
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    combine(value_, rhs.value_, [](auto& a, const auto& b) { a *= b; });
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw DomainError("exact division by zero");
    combine(value_, rhs.value_, [](auto& a, const auto& b) { a /= b; });
    return *this;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), kind_(ScalarKind::Rational), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols) throw DimensionError("entry count does not match rows*cols");
    kind_ = entries_.front().kind();
    for (const auto& e : entries_)
        if (e.kind() != kind_) throw MixedScalarError("matrix mixes rationals and rational functions");
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, ScalarKind kind)
    : ExactMatrix(rows, cols, std::vector<Scalar>(rows * cols, Scalar::zero(kind))) {}

ExactMatrix ExactMatrix::identity(std::size_t size, ScalarKind kind) {
    ExactMatrix m(size, size, kind);
    for (std::size_t i = 0; i < size; ++i) m.entries_[i * size + i] = Scalar::one(kind);
    return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar v) {
    if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
    if (v.kind() != kind_) throw MixedScalarError("entry kind differs from matrix kind");
    entries_[r * cols_ + c] = std::move(v);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, kind_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    return t;
}

Scalar ExactMatrix::entry_sum() const {
    Scalar s = Scalar::zero(kind_);
    for (const auto& e : entries_) s += e;
    return s;
}

ExactMatrix ExactMatrix::evaluate_at(const Rational& at) const {
    if (kind_ != ScalarKind::RationalFunction) throw MixedScalarError("evaluate_at needs a rational-function matrix");
    std::vector<Scalar> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.emplace_back(e.rational_function().evaluate(at));
    return {rows_, cols_, std::move(out)};
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    if (a.kind_ != b.kind_) throw MixedScalarError("matrix product mixes scalar kinds");
    ExactMatrix out(a.rows_, b.cols_, a.kind_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Scalar acc = Scalar::zero(a.kind_);
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Scalar& x = a(i, l);
                if (!x.is_zero()) acc += x * b(l, j);
            }
            out.entries_[i * b.cols_ + j] = std::move(acc);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over an integral domain (Z or Z[x]).

namespace {

bool is_zero(const Integer& v) { return v == 0; }

// target <- (pivot*target - lead*pivot_row) / prev, the division being exact.
void bareiss_update(Integer& target, const Integer& pivot, const Integer& lead, const Integer& pivot_row,
                    const Integer& prev, Integer& scratch) {
    mpz_mul(scratch.get_mpz_t(), pivot.get_mpz_t(), target.get_mpz_t());
    mpz_submul(scratch.get_mpz_t(), lead.get_mpz_t(), pivot_row.get_mpz_t());
    if (prev == 1)
        mpz_swap(target.get_mpz_t(), scratch.get_mpz_t());
    else
        mpz_divexact(target.get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
}

void bareiss_update(Polynomial& target, const Polynomial& pivot, const Polynomial& lead, const Polynomial& pivot_row,
                    const Polynomial& prev, Polynomial& /*scratch*/) {
    Polynomial t = pivot * target;
    if (!lead.is_zero() && !pivot_row.is_zero()) t -= lead * pivot_row;
    target = prev == Polynomial(1) ? std::move(t) : exact_quotient(t, prev);
}

template <class R>
void swap_rows(std::vector<R>& m, std::size_t cols, std::size_t r1, std::size_t r2) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(m[r1 * cols + c], m[r2 * cols + c]);
}

template <class R>
std::size_t find_pivot(const std::vector<R>& a, std::size_t n, std::size_t k) {
    for (std::size_t p = k; p < n; ++p)
        if (!is_zero(a[p * n + k])) return p;
    return n;
}

template <class R>
R bareiss_determinant(std::vector<R> a, std::size_t n) {
    R prev(1L);
    R scratch;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = find_pivot(a, n, k);
        if (p == n) return R(0L);
        if (p != k) {
            swap_rows(a, n, p, k);
            negate = !negate;
        }
        const R pivot = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const R lead = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j)
                bareiss_update(a[i * n + j], pivot, lead, a[k * n + j], prev, scratch);
        }
        prev = pivot;
    }
    if (negate) prev = R(0L) - prev;
    return prev;
}

template <class R>
struct DomainSolution {
    R det;
    std::vector<R> solution;
};

// Fraction-free Gauss-Jordan on [a | b]. On return a*solution = det*b, det = det(a).
template <class R>
DomainSolution<R> gauss_jordan(std::vector<R> a, std::vector<R> b, std::size_t n, std::size_t m) {
    R prev(1L);
    R scratch;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = find_pivot(a, n, k);
        if (p == n) return {R(0L), {}};
        if (p != k) {
            swap_rows(a, n, p, k);
            swap_rows(b, m, p, k);
            negate = !negate;
        }
        const R pivot = a[k * n + k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const R lead = a[i * n + k];
            for (std::size_t j = k + 1; j < n; ++j)
                bareiss_update(a[i * n + j], pivot, lead, a[k * n + j], prev, scratch);
            for (std::size_t j = 0; j < m; ++j) bareiss_update(b[i * m + j], pivot, lead, b[k * m + j], prev, scratch);
            a[i * n + k] = R(0L);
        }
        prev = pivot;
    }
    // Every diagonal entry now equals the last pivot, det(a) up to the swap sign.
    if (negate) {
        prev = R(0L) - prev;
        for (auto& v : b) v = R(0L) - v;
    }
    return {std::move(prev), std::move(b)};
}

Integer lcm_integer(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Polynomial lcm_polynomial(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a * exact_quotient(b, gcd(a, b));
    return out.leading() < 0 ? -out : out;
}

// Multiply each row of [m | rhs] by the lcm of its denominators, so entries land in
// the integral domain. The row scales are returned for determinant bookkeeping.
struct IntegerRows {
    std::vector<Integer> a, b, scale;
};

IntegerRows to_integer_rows(const ExactMatrix& m, const ExactMatrix* rhs) {
    const std::size_t n = m.rows();
    const std::size_t k = rhs ? rhs->cols() : 0;
    IntegerRows out;
    out.a.resize(n * m.cols());
    out.b.resize(n * k);
    out.scale.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer s = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) s = lcm_integer(s, m(i, j).rational().get_den());
        for (std::size_t j = 0; j < k; ++j) s = lcm_integer(s, (*rhs)(i, j).rational().get_den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m(i, j).rational();
            out.a[i * m.cols() + j] = v.get_num() * (s / v.get_den());
        }
        for (std::size_t j = 0; j < k; ++j) {
            const Rational& v = (*rhs)(i, j).rational();
            out.b[i * k + j] = v.get_num() * (s / v.get_den());
        }
        out.scale[i] = s;
    }
    return out;
}

struct PolynomialRows {
    std::vector<Polynomial> a, b, scale;
};

PolynomialRows to_polynomial_rows(const ExactMatrix& m, const ExactMatrix* rhs) {
    const std::size_t n = m.rows();
    const std::size_t k = rhs ? rhs->cols() : 0;
    PolynomialRows out;
    out.a.resize(n * m.cols());
    out.b.resize(n * k);
    out.scale.resize(n);
    auto lift = [](const RationalFunction& v, const Polynomial& s) {
        return v.numerator() * exact_quotient(s, v.denominator());
    };
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial s(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            s = lcm_polynomial(s, m(i, j).rational_function().denominator());
        for (std::size_t j = 0; j < k; ++j) s = lcm_polynomial(s, (*rhs)(i, j).rational_function().denominator());
        for (std::size_t j = 0; j < m.cols(); ++j) out.a[i * m.cols() + j] = lift(m(i, j).rational_function(), s);
        for (std::size_t j = 0; j < k; ++j) out.b[i * k + j] = lift((*rhs)(i, j).rational_function(), s);
        out.scale[i] = s;
    }
    return out;
}

[[noreturn]] void throw_singular(ScalarKind kind) {
    throw SingularMatrixError("matrix is singular (determinant 0)", Scalar::zero(kind));
}

}  // namespace

Scalar determinant(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (m.kind() == ScalarKind::Rational) {
        IntegerRows rows = to_integer_rows(m, nullptr);
        Integer scale = 1;
        for (const auto& s : rows.scale) scale *= s;
        return Scalar(Rational(bareiss_determinant(std::move(rows.a), n), scale));
    }
    PolynomialRows rows = to_polynomial_rows(m, nullptr);
    Polynomial scale(1);
    for (const auto& s : rows.scale) scale *= s;
    return Scalar(RationalFunction(bareiss_determinant(std::move(rows.a), n), scale));
}

ExactMatrix solve(const ExactMatrix& m, const ExactMatrix& rhs) {
    if (!m.is_square()) throw DimensionError("solve with a non-square matrix");
    if (rhs.rows() != m.rows()) throw DimensionError("right-hand side row count mismatch");
    if (rhs.kind() != m.kind()) throw MixedScalarError("solve mixes scalar kinds");
    const std::size_t n = m.rows();
    const std::size_t k = rhs.cols();
    std::vector<Scalar> out;
    out.reserve(n * k);
    if (m.kind() == ScalarKind::Rational) {
        IntegerRows rows = to_integer_rows(m, &rhs);
        auto sol = gauss_jordan(std::move(rows.a), std::move(rows.b), n, k);
        if (sol.det == 0) throw_singular(m.kind());
        for (const auto& v : sol.solution) {
            Rational r(v, sol.det);
            r.canonicalize();
            out.emplace_back(std::move(r));
        }
    } else {
        PolynomialRows rows = to_polynomial_rows(m, &rhs);
        auto sol = gauss_jordan(std::move(rows.a), std::move(rows.b), n, k);
        if (sol.det.is_zero()) throw_singular(m.kind());
        for (const auto& v : sol.solution) out.emplace_back(RationalFunction(v, sol.det));
    }
    return {n, k, std::move(out)};
}

ExactMatrix invert(const ExactMatrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    return solve(m, ExactMatrix::identity(m.rows(), m.kind()));
}

IntegerSolution solve_integer(std::vector<Integer> a, std::vector<Integer> rhs, std::size_t size,
                              std::size_t rhs_cols) {
    if (a.size() != size * size || rhs.size() != size * rhs_cols) throw DimensionError("solve_integer shape mismatch");
    auto sol = gauss_jordan(std::move(a), std::move(rhs), size, rhs_cols);
    return {std::move(sol.det), std::move(sol.solution)};
}

Real to_real(const Rational& v) {
    const Integer& num = v.get_num();
    const Integer& den = v.get_den();
    if (num == 0) return 0;
    Integer mag = abs(num);
    // Scale so the integer quotient carries at least 64 significant bits.
    long shift = 66 + static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                 static_cast<long>(mpz_sizeinbase(mag.get_mpz_t(), 2));
    Integer quot;
    if (shift >= 0) {
        Integer scaled = mag << static_cast<unsigned long>(shift);
        mpz_tdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    } else {
        Integer scaled = den << static_cast<unsigned long>(-shift);
        mpz_tdiv_q(quot.get_mpz_t(), mag.get_mpz_t(), scaled.get_mpz_t());
    }
    long bits = static_cast<long>(mpz_sizeinbase(quot.get_mpz_t(), 2));
    long drop = bits - 64;
    Integer top = quot >> static_cast<unsigned long>(drop);
    Real out = std::ldexp(static_cast<Real>(top.get_ui()), static_cast<int>(drop - shift));
    return num < 0 ? -out : out;
}

}  // namespace freeo
