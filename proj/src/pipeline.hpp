#pragma once

#include "contraction.hpp"
#include "fermat.hpp"
#include "solver.hpp"

#include <array>

namespace fermatlat {

struct CuspSolution {
    HorizontalProfile profile;
    VerticalDivisor correction_f; // against K/(2g-2)
    VerticalDivisor correction_g; // against the branch-point pullback / p^2
    Rational f_squared;
    Rational g_squared;
    Rational s_dot_g;
    Rational s_plus_g_dot_l; // (S+G)·L, the fibre-degree check
};

/// Everything the bounds and the verification sweep need for one prime,
/// computed once: the canonical vertical part, the three cusp classes
/// with their correction divisors, the aggregated log p coefficient,
/// and the blow-down analysis. Pure; independent primes can be analyzed
/// concurrently.
struct FermatAnalysis {
    FermatModel model;
    VerticalDivisor canonical_vertical; // for the x-class cusp, coefficient 0 on L
    std::array<CuspSolution, 3> cusps;  // indexed by CuspClass
    Rational a_p;                       // aggregated over the p cusps of one fibre
    Rational a_p_single;                // single-cusp shortcut, checked equal
    MinimalModelReport minimal;
    Rational bound_regular_coeff;
    Rational bound_minimal_coeff;
    Rational bound_folded_coeff;
};

CorrectionTarget canonical_target(const FermatModel& model, const VerticalDivisor& canonical_vertical);
CorrectionTarget beta_target(const FermatModel& model, CuspClass cls);

FermatAnalysis analyze(FermatModel model);
FermatAnalysis analyze_prime(long p);

} // namespace fermatlat
