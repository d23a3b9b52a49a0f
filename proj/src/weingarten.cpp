#include "freeo/weingarten.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include <Eigen/LU>

namespace freeo {

namespace {

constexpr Real kMinReciprocalCondition = 1e-14L;

void check_even_order(int two_k, const char* who) {
    if (two_k <= 0 || two_k % 2 != 0)
        throw InputError(std::string(who) + " needs an even positive order (odd moments vanish by symmetry)");
}

void check_cap(int k, int cap, const char* what) {
    if (k > cap)
        throw SizeLimitError(std::string(what) + " k=" + std::to_string(k) + " exceeds cap " + std::to_string(cap), cap);
}

std::vector<Integer> integer_gram(int k, const Integer& n) {
    const auto loops = loop_count_table(k);
    int max_loops = k;
    std::vector<Integer> powers(static_cast<std::size_t>(max_loops) + 1);
    powers[0] = 1;
    for (int i = 1; i <= max_loops; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i) - 1] * n;
    std::vector<Integer> g;
    g.reserve(loops->size());
    for (int l : *loops) g.push_back(powers[static_cast<std::size_t>(l)]);
    return g;
}

// det G(n) and 1^T adj(G(n)) 1 at an integer point.
std::pair<Integer, Integer> gram_det_and_adjugate_sum(int k, const Integer& n) {
    const std::size_t size = catalan(k);
    auto sol = solve_integer(integer_gram(k, n), std::vector<Integer>(size, Integer(1)), size, 1);
    Integer sum = 0;
    for (const auto& v : sol.solution) sum += v;
    return {sol.det, sum};
}

// Newton interpolation through (x0 + i, values[i]); the result must have integer coefficients.
Polynomial interpolate_consecutive(long x0, const std::vector<Integer>& values) {
    const std::size_t m = values.size();
    std::vector<Rational> dd(values.begin(), values.end());
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
    // Horner on the Newton basis: P = c_{m-1}; P = P*(x - x_j) + c_j.
    std::vector<Rational> coeffs{dd[m - 1]};
    for (std::size_t jj = m - 1; jj-- > 0;) {
        const Rational node(x0 + static_cast<long>(jj));
        std::vector<Rational> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * node;
        }
        next[0] += dd[jj];
        coeffs = std::move(next);
    }
    std::vector<Integer> out;
    out.reserve(coeffs.size());
    for (auto& c : coeffs) {
        c.canonicalize();
        if (c.get_den() != 1) throw Error("interpolated polynomial has non-integer coefficients");
        out.push_back(c.get_num());
    }
    return Polynomial(std::move(out));
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

int exact_cap() {
    if (const char* env = std::getenv("FREEO_CAP_K")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= kDefaultDiagramCap) return static_cast<int>(v);
        throw InputError("FREEO_CAP_K must be an integer in 1.." + std::to_string(kDefaultDiagramCap));
    }
    return kDefaultExactCap;
}

std::shared_ptr<const std::vector<int>> loop_count_table(int k) {
    static std::map<int, std::shared_ptr<const std::vector<int>>> cache;
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    const auto diagrams = enumerate_diagrams(k);
    auto table = std::make_shared<std::vector<int>>();
    table->reserve(diagrams.size() * diagrams.size());
    for (const auto& p : diagrams)
        for (const auto& q : diagrams) table->push_back(loop_count(p, q));
    std::lock_guard lock(cache_mutex());
    return cache.emplace(k, std::move(table)).first->second;
}

ExactMatrix gram_matrix(const GramSpec& spec) {
    if (spec.k < 1) throw InputError("gram_matrix needs k >= 1");
    const auto loops = loop_count_table(spec.k);
    std::vector<Scalar> powers{Scalar::one(spec.loop_weight.kind())};
    for (int i = 1; i <= spec.k; ++i) powers.push_back(powers.back() * spec.loop_weight);
    std::vector<Scalar> entries;
    entries.reserve(loops->size());
    for (int l : *loops) entries.push_back(powers[static_cast<std::size_t>(l)]);
    const std::size_t size = catalan(spec.k);
    return {size, size, std::move(entries)};
}

std::shared_ptr<const ExactMatrix> weingarten_matrix(const GramSpec& spec) {
    static std::map<std::pair<int, std::string>, std::shared_ptr<const ExactMatrix>> cache;
    const bool symbolic = spec.loop_weight.kind() == ScalarKind::RationalFunction;
    check_cap(spec.k, symbolic ? kSymbolicCap : exact_cap(), symbolic ? "symbolic Weingarten" : "exact Weingarten");
    auto key = std::make_pair(spec.k, spec.loop_weight.to_string());
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    ExactMatrix g = gram_matrix(spec);
    auto w = std::make_shared<const ExactMatrix>(invert(g));
    std::lock_guard lock(cache_mutex());
    return cache.emplace(std::move(key), std::move(w)).first->second;
}

Rational moment_uij(int n, int two_k, bool normalized) {
    static std::map<std::pair<int, int>, Rational> cache;
    check_even_order(two_k, "moment_uij");
    if (n < 1) throw DomainError("moment_uij needs n >= 1");
    const int k = two_k / 2;
    check_cap(k, exact_cap(), "exact moment");

    Rational sum;
    bool cached = false;
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find({n, k}); it != cache.end()) {
            sum = it->second;
            cached = true;
        }
    }
    if (!cached) {
        auto [det, adj_sum] = gram_det_and_adjugate_sum(k, Integer(n));
        if (det == 0)
            throw SingularMatrixError("Gram matrix at N=" + std::to_string(n) + ", k=" + std::to_string(k) + " is singular",
                                      Scalar(Rational(0)));
        sum = Rational(adj_sum, det);
        sum.canonicalize();
        std::lock_guard lock(cache_mutex());
        cache.emplace(std::make_pair(n, k), sum);
    }
    if (!normalized) return sum;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n + 2), static_cast<unsigned long>(k));
    return sum * Rational(scale);
}

RationalFunction moment_rational_in_n(int two_k) {
    static std::map<int, RationalFunction> cache;
    check_even_order(two_k, "moment_rational_in_n");
    const int k = two_k / 2;
    check_cap(k, kSymbolicCap, "symbolic moment");
    {
        std::lock_guard lock(cache_mutex());
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }

    // Points n0 >= 2 keep the Gram matrix invertible (its zeros lie in (-2, 2)).
    const long x0 = 2;
    const std::size_t degree_bound = static_cast<std::size_t>(k) * catalan(k);
    std::vector<Integer> dets, adj_sums;
    dets.reserve(degree_bound + 1);
    adj_sums.reserve(degree_bound + 1);
    for (std::size_t i = 0; i <= degree_bound; ++i) {
        auto [det, adj] = gram_det_and_adjugate_sum(k, Integer(x0 + static_cast<long>(i)));
        dets.push_back(std::move(det));
        adj_sums.push_back(std::move(adj));
    }
    Polynomial det_poly = interpolate_consecutive(x0, dets);
    Polynomial adj_poly = interpolate_consecutive(x0, adj_sums);

    Polynomial scale(1);
    for (int i = 0; i < k; ++i) scale *= Polynomial({2, 1});
    RationalFunction out(adj_poly * scale, det_poly);

    std::lock_guard lock(cache_mutex());
    return cache.emplace(k, std::move(out)).first->second;
}

Real general_F_moment(const RealMatrix& f, int two_k) {
    check_even_order(two_k, "general_F_moment");
    if (f.rows() != f.cols() || f.rows() == 0) throw InputError("general_F_moment needs a nonempty square F");
    const int k = two_k / 2;
    check_cap(k, exact_cap(), "general-F moment");

    const Real loop_weight = f.array().square().sum();
    const Real string_sum = f.sum();
    const auto loops = loop_count_table(k);
    const auto size = static_cast<Eigen::Index>(catalan(k));

    RealMatrix g(size, size);
    for (Eigen::Index i = 0; i < size; ++i)
        for (Eigen::Index j = 0; j < size; ++j)
            g(i, j) = std::pow(loop_weight, static_cast<Real>((*loops)[static_cast<std::size_t>(i * size + j)]));

    Eigen::FullPivLU<RealMatrix> lu(g);
    const Real rcond = lu.rcond();
    if (!lu.isInvertible() || !(rcond >= kMinReciprocalCondition))
        throw ConditionError("Gram matrix at N=" + std::to_string(static_cast<double>(loop_weight)) +
                                 " is numerically singular (rcond " + std::to_string(static_cast<double>(rcond)) + ")",
                             rcond);
    const Eigen::Matrix<Real, Eigen::Dynamic, 1> ones = Eigen::Matrix<Real, Eigen::Dynamic, 1>::Ones(size);
    const Real weingarten_sum = lu.solve(ones).sum();
    // Each string of p contributes an independent full sum over its two indices.
    const Real s_p = std::pow(string_sum, static_cast<Real>(k));
    return s_p * s_p * weingarten_sum;
}

RealMatrix suq2_parameter_matrix(Real q) {
    if (!(q < 0 && q >= -1)) throw DomainError("suq2_parameter_matrix needs q in [-1, 0)");
    RealMatrix f(2, 2);
    const Real r = std::sqrt(-q);
    f << 0, r, 1 / r, 0;
    return f;
}

}  // namespace freeo
