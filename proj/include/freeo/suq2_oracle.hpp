#pragma once

#include <vector>

#include "freeo/qlaw.hpp"
#include "freeo/real.hpp"

namespace freeo {

/// Pair (A, B) with A B = -q parameterizing the diagonal of the tridiagonal model.
struct Gauge {
    Complex a;
    Complex b;

    /// A = B = sqrt(-q).
    static Gauge standard(Real q);
    /// A = sqrt(-q) e^{i theta}, B = conj(A).
    static Gauge rotated(Real q, Real theta);
};

/// K x K truncation of the operator
///   M e_k = e_{k+1} + q^k (A u + B/u) e_k + (1 - q^{2k}) e_{k-1},   D e_k = q^{2k} e_k.
/// Stored as its three diagonals; products are banded.
class TridiagonalModel {
  public:
    TridiagonalModel(int size, Real q, Gauge gauge, Complex u);

    int size() const noexcept { return static_cast<int>(diag_.size()); }
    Real q() const noexcept { return q_; }

    Complex diagonal(int k) const { return diag_[static_cast<std::size_t>(k)]; }
    Real super_diagonal(int k) const { return super_[static_cast<std::size_t>(k)]; }  // entry (k-1, k)
    Real weight(int k) const { return weight_[static_cast<std::size_t>(k)]; }

    /// y = M x.
    void apply(const std::vector<Complex>& x, std::vector<Complex>& y) const;

    /// tr(D M^m) for m = 0..m_max.
    std::vector<Complex> weighted_trace_powers(int m_max) const;

    /// Upper bound on the operator norm: 2 + |A| + |B|.
    Real norm_bound() const noexcept { return 2 + std::abs(gauge_.a) + std::abs(gauge_.b); }

  private:
    Real q_;
    Gauge gauge_;
    std::vector<Complex> diag_;
    std::vector<Real> super_;
    std::vector<Real> weight_;
};

/// (a; q)_k = (1 - a)(1 - q a)...(1 - q^{k-1} a).
Complex qpochhammer(Complex a, Real q, int k);

/// (a; q)_inf, stopped once |q^j a| falls below machine epsilon times the partial product.
Complex qpochhammer_inf(Complex a, Real q);

/// Al-Salam-Chihara parameters, restricted to the conjugate regime
/// |a| = |b| < 1 with a b = -q.
struct ASCParams {
    Complex a;
    Complex b;
    Real q;

    ASCParams(Complex a, Complex b, Real q);
    /// a = A u, b = B / u.
    static ASCParams from_gauge(const Gauge& gauge, Complex u, Real q);
};

/// Q_k(x) by forward recurrence
///   2x Q_k = Q_{k+1} + q^k (a+b) Q_k + (1-q^k)(1-ab q^{k-1}) Q_{k-1}.
Complex asc_eval(int k, Real x, const ASCParams& params);

/// Q_0(x), ..., Q_k_max(x).
std::vector<Complex> asc_sequence(int k_max, Real x, const ASCParams& params);

/// Squared norm (q, ab; q)_k of Q_k under the Askey-Wilson measure.
Real asc_norm(int k, const ASCParams& params);

/// beta(x) with d mu = beta(x) dx / sqrt(1 - x^2), x = cos theta. Throws DomainError for |x| >= 1.
Real aw_weight(Real x, const ASCParams& params);

/// P_t(x, x) = sum_k Q_k(x)^2 t^k / (q, ab; q)_k. Stops once a term falls below
/// 1e-16 of the partial sum; throws ConvergenceError after max_terms.
Real poisson_diag(Real x, Real t, const ASCParams& params, int max_terms = 10'000);

/// Smallest K with q^{2(K-2k)} (2 + 2 sqrt(-q))^{2k} / (1 - q^2) < 1e-14.
int min_truncation(Real q, int k);

/// (1 - q^2) (1/U) sum_j tr(D M(u_j)^{2k}) over U equispaced phases u_j on the circle.
/// Throws InputError when K < min_truncation(q, k) or u_points < 2k + 1.
Real haar_trace_moment(const LawParams& params, int k, int K, int u_points);
Real haar_trace_moment(const LawParams& params, int k, int K, int u_points, const Gauge& gauge);

}  // namespace freeo
