#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace fermatlat {

/// Arbitrary-precision rational number, always held in canonical form:
/// gcd(|num|, den) = 1 and den > 0. Backed by GMP; every operation
/// re-canonicalizes, so the invariants hold after construction and
/// after each arithmetic step. Equality is exact and decidable.
class Rational {
public:
    Rational() = default; // mpq canonical zero, no digit allocation
    Rational(long n) : q_(n) {} // NOLINT: implicit by design, integers embed in Q
    Rational(long num, long den);
    explicit Rational(const mpz_class& n) : q_(n) {}
    explicit Rational(const mpq_class& q);

    // Parses "num/den" or "num" with optional leading '-'.
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // |num| * den; the pivot weight used by the exact solver.
    mpz_class pivot_magnitude() const;

    // "num" when den == 1, otherwise "num/den".
    std::string str() const;

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

} // namespace fermatlat
