#include "freeo/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "freeo/errors.hpp"

namespace freeo {

Polynomial::Polynomial(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

Polynomial::Polynomial(const Integer& c) {
    if (c != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::initializer_list<long> coeffs_low_first) {
    coeffs_.reserve(coeffs_low_first.size());
    for (long c : coeffs_low_first) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<Integer> coeffs_low_first) : coeffs_(std::move(coeffs_low_first)) { trim(); }

Polynomial Polynomial::x() { return Polynomial({0, 1}); }

Polynomial Polynomial::monomial(const Integer& c, int degree) {
    if (c == 0) return {};
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& Polynomial::leading() const {
    if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Integer& Polynomial::coeff(int i) const {
    static const Integer zero = 0;
    if (i < 0 || i > degree()) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Integer Polynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (leading() < 0) c = -c;
    return exact_quotient(*this, c);
}

Rational Polynomial::evaluate(const Rational& at) const {
    Rational x = at;
    x.canonicalize();
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Integer Polynomial::evaluate(const Integer& at) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Integer& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeff(i);
        if (c == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string term;
        if (i == 0) {
            term = mag.get_str();
        } else {
            if (mag != 1) term = mag.get_str() + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

Polynomial exact_quotient(const Polynomial& a, const Integer& c) {
    if (c == 0) throw InputError("polynomial division by zero");
    std::vector<Integer> out(a.coeffs());
    for (auto& v : out) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
            throw InputError("inexact polynomial division by integer " + c.get_str());
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    }
    return Polynomial(std::move(out));
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (b.degree() == 0) return exact_quotient(a, b.leading());
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw InputError("inexact polynomial division");

    std::vector<Integer> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const Integer& lb = b.leading();
    const int db = b.degree();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    Integer t;
    for (int s = a.degree() - db; s >= 0; --s) {
        Integer& top = rem[static_cast<std::size_t>(s + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) throw InputError("inexact polynomial division");
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[static_cast<std::size_t>(s + j)].get_mpz_t(), t.get_mpz_t(),
                       bc[static_cast<std::size_t>(j)].get_mpz_t());
        quot[static_cast<std::size_t>(s)] = t;
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& v) { return v != 0; }))
        throw InputError("inexact polynomial division");
    return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InputError("pseudo-remainder by the zero polynomial");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    const Integer lb = b.leading();
    std::vector<Integer> rem(a.coeffs());
    const auto& bc = b.coeffs();
    for (int top = a.degree(); top >= db; --top) {
        Integer lead = rem[static_cast<std::size_t>(top)];
        for (auto& v : rem) v *= lb;
        if (lead != 0) {
            for (int j = 0; j <= db; ++j)
                mpz_submul(rem[static_cast<std::size_t>(top - db + j)].get_mpz_t(), lead.get_mpz_t(),
                           bc[static_cast<std::size_t>(j)].get_mpz_t());
        }
        rem.pop_back();
    }
    return Polynomial(std::move(rem));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;

    Integer c;
    mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    Polynomial u = a.primitive_part();
    Polynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Polynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = r.primitive_part();
    }
    return u.primitive_part() * c;
}

// ---------------------------------------------------------------------------

RationalFunction::RationalFunction(const Rational& c) {
    Rational v = c;
    v.canonicalize();
    num_ = Polynomial(v.get_num());
    den_ = Polynomial(v.get_den());
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    Integer c;
    mpz_gcd(c.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
        num_ = exact_quotient(num_, c);
        den_ = exact_quotient(den_, c);
    }
}

Rational RationalFunction::evaluate(const Rational& at) const {
    Rational d = den_.evaluate(at);
    if (d == 0) throw DomainError("rational function has a pole at " + at.get_str());
    return num_.evaluate(at) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw DomainError("division by the zero rational function");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
}

namespace {

bool single_term(const Polynomial& p) {
    return std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c != 0; }) <= 1;
}

}  // namespace

std::string RationalFunction::to_string(const std::string& var) const {
    std::string num = num_.to_string(var);
    if (den_ == Polynomial(1)) return num;
    if (!single_term(num_)) num = "(" + num + ")";
    std::string den = den_.to_string(var);
    bool bare = den_.degree() == 0 || (single_term(den_) && den_.leading() == 1);
    return num + "/" + (bare ? den : "(" + den + ")");
}

}  // namespace freeo
