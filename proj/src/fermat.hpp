#pragma once

#include "fiber.hpp"

#include <array>
#include <string>
#include <vector>

namespace fermatlat {

/// Root split of phi(X,-1) = ((X-1)^p - X^p + 1)/p over F_p:
/// r distinct roots outside {0,1} (each of multiplicity exactly 2,
/// giving the multiplicity-2 components) and s = p - 3 - 2r simple
/// roots outside F_p (the remaining multiplicity-1 components).
struct MirimanoffSplit {
    long r = 0;
    long s = 0;
    std::vector<long> roots; // the r double roots in F_p, sorted
};

/// Computes the split from exact integer binomial coefficients, reduces
/// mod p, cross-checks against the congruence phi(X,-1) = sum X^k/k,
/// counts distinct F_p roots via gcd(f, X^p - X), and verifies the
/// multiplicity pattern (0 and 1 simple, the others exactly double)
/// through gcds with the derivative. Throws SplitInconsistent when any
/// of these checks disagree, NotPrime for invalid p.
MirimanoffSplit mirimanoff_split(long p);

enum class CuspClass { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<CuspClass, 3> kCuspClasses{CuspClass::X, CuspClass::Y, CuspClass::Z};

const char* cusp_class_name(CuspClass c);

/// Special fibre of the regular model of x^p + y^p = z^p above the
/// totally ramified prime of Z[zeta_p]: the central component L of
/// multiplicity p and self-intersection -1, the lines L_x, L_y, L_z and
/// L_beta_i (multiplicity 1, self-intersection -p) crossing L, and per
/// double root a chain L_alpha_i (2, -p) crossing L with p satellite
/// lines L_alpha_i_j (1, -2). Cusps are tracked per class: every cusp
/// of a class meets exactly its matching line and nothing else, so one
/// representative profile with weight p is exact.
class FermatModel {
public:
    FermatModel(long p, long r, long s);

    long p() const { return p_; }
    long r() const { return r_; }
    long s() const { return s_; }
    long genus() const { return (p_ - 1) * (p_ - 2) / 2; }
    long degree() const { return p_ * p_; } // covering degree of the three-point map
    long b_max() const { return p_; }       // common ramification index over the branch points
    long cusps_per_class() const { return p_; }

    const FiberConfiguration& cfg() const { return cfg_; }
    std::size_t component_index(const std::string& label) const;
    std::size_t cusp_component(CuspClass c) const { return cusp_component_[static_cast<int>(c)]; }
    HorizontalProfile cusp_profile(CuspClass c) const;

    std::string to_json() const;
    std::string to_dot() const;

private:
    long p_, r_, s_;
    FiberConfiguration cfg_;
    std::array<std::size_t, 3> cusp_component_{};
};

FermatModel build_fermat_model(long p);
FermatModel build_fermat_model_with_split(long p, long r, long s);

} // namespace fermatlat
