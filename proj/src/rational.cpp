#include "cartan/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace cartan {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

static bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view n = text.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_text(n) || !valid_integer_text(d) || d[0] == '-' || d[0] == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    std::string ns(n[0] == '+' ? n.substr(1) : n);
    mpz_class num(ns, 10), den(std::string(d), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational power(const Rational& base, int exp) {
    if (exp < 0) return power(Rational(1) / base, -exp);
    Rational r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

TauScalar::TauScalar(const Rational& c, int exp) {
    if (!c.is_zero()) terms_.emplace_back(exp, c);
}

Rational TauScalar::coeff(int exp) const {
    for (const auto& [e, c] : terms_)
        if (e == exp) return c;
    return Rational(0);
}

void TauScalar::add(int exp, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{exp, c});
    }
}

TauScalar& TauScalar::operator+=(const TauScalar& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

TauScalar& TauScalar::operator-=(const TauScalar& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

TauScalar& TauScalar::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

TauScalar operator-(const TauScalar& a) {
    TauScalar r = a;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

TauScalar operator*(const TauScalar& a, const TauScalar& b) {
    TauScalar r;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
        return r;
    }
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
    return r;
}

TauScalar TauScalar::shifted(int by) const {
    TauScalar r = *this;
    for (auto& t : r.terms_) t.first += by;
    return r;
}

std::string TauScalar::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (e == 1) s += "*tau";
        else if (e > 1) s += "*tau^" + std::to_string(e);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const TauScalar& t) { return os << t.str(); }

}  // namespace cartan
