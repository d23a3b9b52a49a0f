#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "freeo/errors.hpp"
#include "freeo/qlaw.hpp"
#include "freeo/verify.hpp"
#include "freeo/weingarten.hpp"

using namespace freeo;
using nlohmann::json;

namespace {

struct Options {
    double n = 3;
    int k_max = 0;
    int points = 2000;
    std::string output;
    std::string format;
    int precision_bits = kDefaultPrecisionBits;
    double series_eps = static_cast<double>(kDefaultSeriesEps);
    int trunc_K = 60;
    int u_points = 0;
    int figure = 0;
    double gauge_theta = 1.0;
    std::string eval;
};

constexpr double kFigureN[] = {50, 20, 5, 2.001};

double as_json_number(Real v) { return static_cast<double>(v); }

json check_json(const Check& c) {
    return {{"check", c.check},         {"method_a", c.method_a},
            {"method_b", c.method_b},   {"value_a", as_json_number(c.value_a)},
            {"value_b", as_json_number(c.value_b)}, {"abs_diff", as_json_number(c.abs_diff)},
            {"tolerance", as_json_number(c.tolerance)}, {"pass", c.pass}};
}

// Writes to --output when given, else stdout.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

MomentOptions moment_options(const Options& o) {
    MomentOptions m;
    m.trunc_K = o.trunc_K;
    m.u_points = o.u_points;
    m.series_eps = o.series_eps;
    m.precision_bits = o.precision_bits;
    return m;
}

int cmd_moments(const Options& o) {
    if (o.n == 2)
        throw DomainError("n = 2 is the boundary q = -1 where the q-series diverge; use `freeo symbolic --eval 2`");
    if (!(o.n > 2)) throw DomainError("moments needs n > 2");
    const int k_max = o.k_max > 0 ? o.k_max : 5;
    MomentOptions m = moment_options(o);
    m.operator_trace = false;
    m.density_quadrature = false;
    const auto report = MomentReport::build(o.n, k_max, m);
    const std::string format = o.format.empty() ? "csv" : o.format;

    Sink sink(o.output);
    std::ostream& out = sink.out();
    json rows = json::array();
    if (format == "csv") out << "two_k,exact,closed_form,abs_diff\n";
    if (format == "text")
        out << std::left << std::setw(6) << "2k" << std::setw(28) << "exact" << std::setw(24) << "closed_form"
            << "abs_diff\n";
    for (const auto& row : report.rows) {
        if (row.two_k % 2 != 0) continue;
        const std::string exact = row.weingarten_exact ? row.weingarten_exact->get_str() : "";
        const std::string closed = format_real(*row.closed_form);
        std::optional<Real> diff_value;
        if (row.weingarten_exact) diff_value = std::abs(to_real(*row.weingarten_exact) - *row.closed_form);
        const std::string diff = diff_value ? format_real(*diff_value, 3) : "";
        if (format == "csv") {
            out << row.two_k << ',' << exact << ',' << closed << ',' << diff << '\n';
        } else if (format == "text") {
            out << std::left << std::setw(6) << row.two_k << std::setw(28) << (exact.empty() ? "-" : exact)
                << std::setw(24) << closed << (diff.empty() ? "-" : diff) << '\n';
        } else {
            json r = {{"two_k", row.two_k}, {"closed_form", as_json_number(*row.closed_form)}};
            r["exact"] = row.weingarten_exact ? json(exact) : json(nullptr);
            r["abs_diff"] = row.weingarten_exact ? json(as_json_number(*diff_value)) : json(nullptr);
            rows.push_back(std::move(r));
        }
    }
    if (format == "json") out << json{{"n", o.n}, {"moments", rows}}.dump(2) << '\n';
    return 0;
}

int cmd_density(const Options& o) {
    const double n = o.figure > 0 ? kFigureN[o.figure - 1] : o.n;
    const auto params = LawParams::from_n(n, o.series_eps, o.precision_bits);
    const auto table = density_table(params, o.points);
    Sink sink(o.output);
    if (o.format.empty() || o.format == "csv") {
        write_density_csv(sink.out(), table);
    } else if (o.format == "json") {
        json xs = json::array(), ds = json::array();
        for (const auto& p : table) {
            xs.push_back(as_json_number(p.x));
            ds.push_back(as_json_number(p.density));
        }
        sink.out() << json{{"n", n}, {"x", xs}, {"density", ds}}.dump() << '\n';
    } else {
        throw InputError("density supports --format csv or json");
    }
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.n != std::floor(o.n) || o.n < 2) throw DomainError("verify needs an integer n >= 2");
    VerifyConfig config;
    config.n = static_cast<int>(o.n);
    if (o.k_max > 0) config.k_max = o.k_max;
    config.gauge_theta = o.gauge_theta;
    config.moments = moment_options(o);
    const auto checks = run_verify(config);
    const bool ok = all_pass(checks);

    Sink sink(o.output);
    std::ostream& out = sink.out();
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(check_json(c));
        out << json{{"n", config.n}, {"pass", ok}, {"checks", arr}}.dump(2) << '\n';
    } else {
        int failed = 0;
        for (const auto& c : checks) {
            failed += c.pass ? 0 : 1;
            out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(36) << c.check << ' ' << c.method_a << " vs "
                << c.method_b << "  a=" << format_real(c.value_a) << " b=" << format_real(c.value_b)
                << " diff=" << format_real(c.abs_diff, 3) << " tol=" << format_real(c.tolerance, 3) << '\n';
        }
        out << checks.size() - static_cast<std::size_t>(failed) << '/' << checks.size() << " checks passed\n";
    }
    return ok ? 0 : 1;
}

int cmd_symbolic(const Options& o) {
    const int k_max = o.k_max > 0 ? o.k_max : 3;
    std::optional<Rational> at;
    if (!o.eval.empty()) {
        try {
            at = Rational(o.eval);
            at->canonicalize();
        } catch (const std::invalid_argument&) {
            throw InputError("--eval expects an integer or a fraction like 5/2, got " + o.eval);
        }
    }
    Sink sink(o.output);
    std::ostream& out = sink.out();
    json rows = json::array();
    for (int k = 1; k <= k_max; ++k) {
        const RationalFunction m = moment_rational_in_n(2 * k);
        std::string value;
        if (at) value = m.evaluate(*at).get_str();
        if (o.format == "json") {
            json r = {{"two_k", 2 * k}, {"moment", m.to_string()}};
            if (at) r["value"] = value;
            rows.push_back(std::move(r));
        } else if (o.format == "csv") {
            if (k == 1) out << (at ? "two_k,moment,value\n" : "two_k,moment\n");
            out << 2 * k << ",\"" << m.to_string() << '"';
            if (at) out << ',' << value;
            out << '\n';
        } else {
            out << "M_" << 2 * k << "(n) = " << m.to_string();
            if (at) out << "    at n=" << at->get_str() << ": " << value;
            out << '\n';
        }
    }
    if (o.format == "json") out << json{{"moments", rows}}.dump(2) << '\n';
    return 0;
}

int cmd_bench(const Options& o) {
    using clock = std::chrono::steady_clock;
    const int n = o.n > 2 && o.n == std::floor(o.n) ? static_cast<int>(o.n) : 3;
    const int k_max = o.k_max > 0 ? std::min(o.k_max, exact_cap()) : exact_cap();
    const auto params = LawParams::from_n(n);
    Sink sink(o.output);
    std::ostream& out = sink.out();
    out << "k,catalan,exact_seconds,closed_form_seconds,abs_diff\n";
    int crossover = 0;
    for (int k = 1; k <= k_max; ++k) {
        const auto t0 = clock::now();
        const Rational exact = moment_uij(n, 2 * k);
        const auto t1 = clock::now();
        constexpr int kReps = 1000;
        Real closed = 0;
        for (int r = 0; r < kReps; ++r) closed += closed_moment(params, k);
        closed /= kReps;
        const auto t2 = clock::now();
        const double exact_s = std::chrono::duration<double>(t1 - t0).count();
        const double closed_s = std::chrono::duration<double>(t2 - t1).count() / kReps;
        if (crossover == 0 && exact_s > closed_s) crossover = k;
        out << k << ',' << catalan(k) << ',' << std::setprecision(6) << exact_s << ',' << closed_s << ','
            << format_real(std::abs(to_real(exact) - closed), 3) << '\n';
    }
    out << "# exact slower than closed form from k=" << crossover << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moments and density of the standard generator of the free orthogonal quantum group"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) {
        sub->add_option("--output,-o", o.output, "output file (default stdout)");
        sub->add_option("--precision-bits", o.precision_bits, "working precision in bits (at most 80)")
            ->check(CLI::Range(1, 80));
        sub->add_option("--series-eps", o.series_eps, "q-series truncation threshold")->check(CLI::PositiveNumber);
    };

    auto* moments = app.add_subcommand("moments", "moment table: exact rational and closed form");
    moments->add_option("--n", o.n, "dimension parameter n > 2")->required();
    moments->add_option("--k-max", o.k_max, "largest half-order k")->check(CLI::Range(1, 200));
    moments->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "text"}));
    add_common(moments);

    auto* density = app.add_subcommand("density", "real-line density table of u_ij");
    auto* density_n = density->add_option("--n", o.n, "dimension parameter n > 2");
    density->add_option("--figure", o.figure, "preset n: 1 -> 50, 2 -> 20, 3 -> 5, 4 -> 2.001")
        ->check(CLI::Range(1, 4))
        ->excludes(density_n);
    density->add_option("--points", o.points, "number of sample points")->check(CLI::Range(2, 10'000'000));
    density->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
    add_common(density);

    auto* verify = app.add_subcommand("verify", "cross-check every method; exit 0 iff all checks pass");
    verify->add_option("--n", o.n, "integer n >= 2")->required();
    verify->add_option("--k-max", o.k_max, "largest half-order k (default 5)")->check(CLI::Range(1, 12));
    verify->add_option("--gauge-theta", o.gauge_theta, "phase of the rotated gauge");
    verify->add_option("--trunc-K", o.trunc_K, "truncation of the operator model")->check(CLI::Range(1, 100'000));
    verify->add_option("--u-points", o.u_points, "phases in the circle average (default 2k+1)")
        ->check(CLI::Range(1, 100'000));
    verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
    add_common(verify);

    auto* symbolic = app.add_subcommand("symbolic", "moments as reduced rational functions of n");
    symbolic->add_option("--k-max", o.k_max, "largest half-order k (default 3)")->check(CLI::Range(1, kSymbolicCap));
    symbolic->add_option("--eval", o.eval, "evaluate at a rational n, e.g. 2 or 5/2");
    symbolic->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "text"}));
    symbolic->add_option("--output,-o", o.output, "output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "timing of the exact and closed-form paths per k");
    bench->add_option("--n", o.n, "integer n >= 3");
    bench->add_option("--k-max", o.k_max, "largest half-order k")->check(CLI::Range(1, 12));
    bench->add_option("--output,-o", o.output, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*moments) return cmd_moments(o);
        if (*density) {
            if (o.figure == 0 && density_n->count() == 0) throw InputError("density needs --n or --figure");
            return cmd_density(o);
        }
        if (*verify) return cmd_verify(o);
        if (*symbolic) return cmd_symbolic(o);
        if (*bench) return cmd_bench(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
