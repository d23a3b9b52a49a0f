#include "freeo/suq2_oracle.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "freeo/errors.hpp"

namespace freeo {

namespace {

constexpr Real kParamTol = 1e-14L;
constexpr Real kTruncationTarget = 1e-14L;
constexpr int kMaxProductFactors = 1'000'000;

void require_q(Real q) {
    if (!(q > -1 && q < 0)) throw DomainError("q must lie in (-1, 0)");
}

}  // namespace

Gauge Gauge::standard(Real q) {
    require_q(q);
    const Real r = std::sqrt(-q);
    return {Complex(r), Complex(r)};
}

Gauge Gauge::rotated(Real q, Real theta) {
    require_q(q);
    const Complex a = std::polar(std::sqrt(-q), theta);
    return {a, std::conj(a)};
}

TridiagonalModel::TridiagonalModel(int size, Real q, Gauge gauge, Complex u) : q_(q), gauge_(gauge) {
    require_q(q);
    if (size < 1) throw InputError("truncation size must be positive");
    if (std::abs(gauge.a * gauge.b + q) >= kParamTol) throw InputError("gauge must satisfy A B = -q");
    if (std::abs(std::abs(u) - 1) > 1e-12L) throw InputError("phase u must have modulus 1");
    const auto n = static_cast<std::size_t>(size);
    diag_.resize(n);
    super_.resize(n);
    weight_.resize(n);
    const Complex phase = gauge.a * u + gauge.b / u;
    Real qk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        diag_[k] = qk * phase;
        super_[k] = 1 - qk * qk;
        weight_[k] = qk * qk;
        qk *= q;
    }
}

void TridiagonalModel::apply(const std::vector<Complex>& x, std::vector<Complex>& y) const {
    const std::size_t n = diag_.size();
    if (x.size() != n) throw DimensionError("vector length does not match the truncation size");
    y.assign(n, Complex(0));
    for (std::size_t i = 0; i < n; ++i) {
        Complex v = diag_[i] * x[i];
        if (i > 0) v += x[i - 1];
        if (i + 1 < n) v += super_[i + 1] * x[i + 1];
        y[i] = v;
    }
}

std::vector<Complex> TridiagonalModel::weighted_trace_powers(int m_max) const {
    if (m_max < 0) throw InputError("m_max must be nonnegative");
    const std::size_t n = diag_.size();
    std::vector<Complex> traces(static_cast<std::size_t>(m_max) + 1, Complex(0));
    std::vector<Complex> v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(v.begin(), v.end(), Complex(0));
        v[i] = 1;
        traces[0] += weight_[i];
        for (int m = 1; m <= m_max; ++m) {
            apply(v, w);
            std::swap(v, w);
            traces[static_cast<std::size_t>(m)] += weight_[i] * v[i];
        }
    }
    return traces;
}

Complex qpochhammer(Complex a, Real q, int k) {
    if (k < 0) throw InputError("qpochhammer needs k >= 0");
    Complex acc = 1;
    Complex term = a;
    for (int j = 0; j < k; ++j) {
        acc *= Real(1) - term;
        term *= q;
    }
    return acc;
}

Complex qpochhammer_inf(Complex a, Real q) {
    if (!(std::abs(q) < 1)) throw DomainError("infinite q-Pochhammer symbol needs |q| < 1");
    const Real eps = std::numeric_limits<Real>::epsilon();
    Complex acc = 1;
    Complex term = a;
    for (int j = 0; j < kMaxProductFactors; ++j) {
        if (std::abs(term) < eps * std::abs(acc)) return acc;
        acc *= Real(1) - term;
        term *= q;
    }
    throw ConvergenceError("infinite q-Pochhammer product did not converge");
}

ASCParams::ASCParams(Complex a_, Complex b_, Real q_) : a(a_), b(b_), q(q_) {
    require_q(q);
    if (std::abs(a * b + q) >= kParamTol) throw InputError("Al-Salam-Chihara parameters must satisfy a b = -q");
    if (std::abs(std::abs(a) - std::abs(b)) >= kParamTol) throw InputError("Al-Salam-Chihara parameters need |a| = |b|");
    if (!(std::abs(a) < 1)) throw DomainError("Al-Salam-Chihara parameters need |a| < 1");
}

ASCParams ASCParams::from_gauge(const Gauge& gauge, Complex u, Real q) { return {gauge.a * u, gauge.b / u, q}; }

std::vector<Complex> asc_sequence(int k_max, Real x, const ASCParams& p) {
    if (k_max < 0) throw InputError("asc_sequence needs k_max >= 0");
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(k_max) + 1);
    out.push_back(1);
    const Complex s = p.a + p.b;
    const Complex ab = p.a * p.b;
    Complex prev = 0;
    Real qk = 1;
    Complex ab_qkm1 = ab / p.q;  // ab q^{k-1} at k = 0
    for (int k = 0; k < k_max; ++k) {
        const Complex cur = out.back();
        const Complex next = (Real(2) * x - qk * s) * cur - (Real(1) - qk) * (Real(1) - ab_qkm1) * prev;
        prev = cur;
        out.push_back(next);
        qk *= p.q;
        ab_qkm1 *= p.q;
    }
    return out;
}

Complex asc_eval(int k, Real x, const ASCParams& params) {
    if (k < 0) throw InputError("asc_eval needs k >= 0");
    return asc_sequence(k, x, params).back();
}

Real asc_norm(int k, const ASCParams& p) {
    return (qpochhammer(Complex(p.q), p.q, k) * qpochhammer(p.a * p.b, p.q, k)).real();
}

Real aw_weight(Real x, const ASCParams& p) {
    if (!(std::abs(x) < 1)) throw DomainError("aw_weight needs |x| < 1");
    const Complex z = std::polar(Real(1), std::acos(x));
    const Complex zi = std::conj(z);
    const Complex num = qpochhammer_inf(Complex(p.q), p.q) * qpochhammer_inf(p.a * p.b, p.q) *
                        qpochhammer_inf(z * z, p.q) * qpochhammer_inf(zi * zi, p.q);
    const Complex den = qpochhammer_inf(p.a * z, p.q) * qpochhammer_inf(p.a * zi, p.q) *
                        qpochhammer_inf(p.b * z, p.q) * qpochhammer_inf(p.b * zi, p.q);
    return (num / den).real() / (2 * kPi);
}

Real poisson_diag(Real x, Real t, const ASCParams& p, int max_terms) {
    if (!(std::abs(t) < 1)) throw DomainError("poisson_diag needs |t| < 1");
    const Complex s = p.a + p.b;
    const Complex ab = p.a * p.b;
    Complex prev = 0, cur = 1;
    Real norm = 1, tk = 1, qk = 1;
    Real sum = 0;
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        const Real term = (cur * cur).real() * tk / norm;
        sum += term;
        small_run = (std::abs(term) < 1e-16L * std::abs(sum)) ? small_run + 1 : 0;
        if (small_run >= 2) return sum;
        const Complex next = (Real(2) * x - qk * s) * cur - (Real(1) - qk) * (Real(1) - ab * qk / p.q) * prev;
        prev = cur;
        cur = next;
        norm *= ((Real(1) - qk * p.q) * (Real(1) - ab * qk)).real();
        tk *= t;
        qk *= p.q;
    }
    throw ConvergenceError("Poisson kernel series did not converge within " + std::to_string(max_terms) + " terms");
}

int min_truncation(Real q, int k) {
    require_q(q);
    if (k < 0) throw InputError("min_truncation needs k >= 0");
    const Real log_bound =
        static_cast<Real>(2 * k) * std::log(2 + 2 * std::sqrt(-q)) - std::log1p(-q * q) - std::log(kTruncationTarget);
    // q^{2(K-2k)} < target (1-q^2) / (2 + 2 sqrt(-q))^{2k}
    const Real excess = log_bound / (-2 * std::log(-q));
    return 2 * k + static_cast<int>(std::floor(excess)) + 1;
}

Real haar_trace_moment(const LawParams& params, int k, int K, int u_points) {
    if (params.boundary) throw DomainError("the operator model needs q in (-1, 0); n = 2 is the boundary");
    return haar_trace_moment(params, k, K, u_points, Gauge::standard(params.q));
}

Real haar_trace_moment(const LawParams& params, int k, int K, int u_points, const Gauge& gauge) {
    if (params.boundary) throw DomainError("the operator model needs q in (-1, 0); n = 2 is the boundary");
    if (k < 0) throw InputError("haar_trace_moment needs k >= 0");
    const int k_min = min_truncation(params.q, k);
    if (K < k_min)
        throw InputError("truncation K=" + std::to_string(K) + " below the safe minimum " + std::to_string(k_min) +
                         " for k=" + std::to_string(k));
    if (u_points < 2 * k + 1)
        throw InputError("u_points=" + std::to_string(u_points) + " below 2k+1=" + std::to_string(2 * k + 1));
    Complex total = 0;
    for (int j = 0; j < u_points; ++j) {
        const Complex u = std::polar(Real(1), 2 * kPi * static_cast<Real>(j) / static_cast<Real>(u_points));
        const TridiagonalModel model(K, params.q, gauge, u);
        total += model.weighted_trace_powers(2 * k).back();
    }
    return (1 - params.q * params.q) * total.real() / static_cast<Real>(u_points);
}

}  // namespace freeo
