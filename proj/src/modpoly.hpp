#pragma once

#include <cstdint>
#include <vector>

namespace fermatlat {

/// Dense univariate polynomial over F_p for word-sized odd primes p.
/// Coefficients are kept reduced in [0, p). The zero polynomial has an
/// empty coefficient vector and degree() == -1.
class ModPoly {
public:
    explicit ModPoly(std::uint64_t p) : p_(p) {}
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    std::uint64_t modulus() const { return p_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    std::uint64_t eval(std::uint64_t a) const;

    ModPoly derivative() const;
    ModPoly monic() const;

    static ModPoly x(std::uint64_t p);
    static ModPoly x_minus(std::uint64_t p, std::uint64_t a);

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);

    // Quotient and remainder by a nonzero divisor.
    static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);

    // Monic gcd.
    static ModPoly gcd(ModPoly a, ModPoly b);

    // X^e mod f by repeated squaring; f must have degree >= 1.
    static ModPoly pow_x_mod(std::uint64_t e, const ModPoly& f);

    friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

private:
    void trim();

    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

} // namespace fermatlat
