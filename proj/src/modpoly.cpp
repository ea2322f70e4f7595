#include "modpoly.hpp"

#include "errors.hpp"

#include <utility>

namespace fermatlat {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // p < 2^31, so the product fits in 64 bits
}

} // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw Error("element not invertible mod p");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_)
        c %= p_;
    trim();
}

void ModPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::uint64_t ModPoly::eval(std::uint64_t a) const {
    a %= p_;
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = (mulmod(acc, a, p_) + coeffs_[i]) % p_;
    return acc;
}

ModPoly ModPoly::derivative() const {
    ModPoly d(p_);
    if (coeffs_.size() <= 1)
        return d;
    d.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.coeffs_[i - 1] = mulmod(coeffs_[i], i % p_, p_);
    d.trim();
    return d;
}

ModPoly ModPoly::monic() const {
    if (is_zero())
        return *this;
    const std::uint64_t inv = mod_inverse(coeffs_.back(), p_);
    ModPoly m(p_);
    m.coeffs_.resize(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        m.coeffs_[i] = mulmod(coeffs_[i], inv, p_);
    return m;
}

ModPoly ModPoly::x(std::uint64_t p) {
    return ModPoly(p, {0, 1});
}

ModPoly ModPoly::x_minus(std::uint64_t p, std::uint64_t a) {
    return ModPoly(p, {(p - a % p) % p, 1});
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly out(a.p_);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    out.trim();
    return out;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly out(a.p_);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    out.trim();
    return out;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    ModPoly out(a.p_);
    if (a.is_zero() || b.is_zero())
        return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] = (out.coeffs_[i + j] + mulmod(a.coeffs_[i], b.coeffs_[j], a.p_)) % a.p_;
    }
    out.trim();
    return out;
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero())
        throw Error("polynomial division by zero");
    const std::uint64_t p = a.p_;
    ModPoly q(p), r = a;
    if (a.degree() < b.degree())
        return {q, r};
    q.coeffs_.assign(a.coeffs_.size() - b.coeffs_.size() + 1, 0);
    const std::uint64_t lead_inv = mod_inverse(b.coeffs_.back(), p);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = r.coeffs_.size() - b.coeffs_.size();
        const std::uint64_t factor = mulmod(r.coeffs_.back(), lead_inv, p);
        q.coeffs_[shift] = factor;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            const std::uint64_t sub = mulmod(factor, b.coeffs_[i], p);
            r.coeffs_[shift + i] = (r.coeffs_[shift + i] + p - sub) % p;
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly ModPoly::pow_x_mod(std::uint64_t e, const ModPoly& f) {
    if (f.degree() < 1)
        throw Error("modulus polynomial must have degree >= 1");
    ModPoly result(f.p_, {1});
    const ModPoly base = divmod(x(f.p_), f).second;
    int bits = 0;
    for (std::uint64_t t = e; t != 0; t >>= 1)
        ++bits;
    for (int i = bits - 1; i >= 0; --i) {
        result = divmod(result * result, f).second;
        if ((e >> i) & 1)
            result = divmod(result * base, f).second;
    }
    return result;
}

} // namespace fermatlat
