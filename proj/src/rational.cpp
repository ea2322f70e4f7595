#include "rational.hpp"

#include "errors.hpp"

#include <ostream>

namespace fermatlat {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            const mpz_class n(text);
            return Rational(mpq_class(n));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0)
            throw Error("rational with zero denominator: " + text);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational: " + text);
    }
}

mpz_class Rational::pivot_magnitude() const {
    mpz_class m;
    mpz_mul(m.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    mpz_abs(m.get_mpz_t(), m.get_mpz_t());
    return m;
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace fermatlat
