#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cartan {

// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den = 1);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);
Rational power(const Rational& base, int exp);

// Polynomial in the formal constant tau with rational coefficients.
// Terms sorted by exponent, zero coefficients never stored.
class TauScalar {
public:
    using Term = std::pair<int, Rational>;

    TauScalar() = default;
    TauScalar(const Rational& c, int exp = 0);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int exp) const;
    // Only meaningful when the scalar is a single tau power.
    bool is_monomial() const { return terms_.size() == 1; }

    TauScalar& operator+=(const TauScalar& o);
    TauScalar& operator-=(const TauScalar& o);
    TauScalar& operator*=(const Rational& c);
    friend TauScalar operator+(TauScalar a, const TauScalar& b) { return a += b; }
    friend TauScalar operator-(TauScalar a, const TauScalar& b) { return a -= b; }
    friend TauScalar operator-(const TauScalar& a);
    friend TauScalar operator*(const TauScalar& a, const TauScalar& b);
    friend TauScalar operator*(TauScalar a, const Rational& c) { return a *= c; }
    friend TauScalar operator*(const Rational& c, TauScalar a) { return a *= c; }
    friend bool operator==(const TauScalar& a, const TauScalar& b) = default;

    // Adds c * tau^exp in place.
    void add(int exp, const Rational& c);
    TauScalar shifted(int by) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const TauScalar& t);

}  // namespace cartan
