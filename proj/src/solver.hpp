#pragma once

#include "fiber.hpp"
#include "linalg.hpp"

#include <cstddef>
#include <vector>

namespace fermatlat {

/// Target class T = scale * (horizontal + vertical) that a cusp section
/// is corrected against: K/(2g-2) with horizontal hits (2g-2) on the
/// cusp's component, or the branch-point pullback divided by the
/// covering degree with horizontal hits d on the matching component.
struct CorrectionTarget {
    HorizontalProfile horizontal;
    VerticalDivisor vertical;
    Rational scale;
};

/// Unique vertical V with coefficient 0 on normalize_on such that
/// K = (2g-2)*cusp + V satisfies the adjunction formula on every
/// component. The kernel of the full intersection matrix is spanned by
/// the full fibre, so dropping the normalized column pins the solution.
VerticalDivisor solve_canonical_vertical(const FiberConfiguration& cfg,
                                         const HorizontalProfile& cusp, long g,
                                         std::size_t normalize_on);

/// Unique vertical V with coefficient 0 on normalize_on such that
/// (cusp + V - scale*(T_h + T_v)) pairs to zero with every component.
VerticalDivisor solve_correction(const FiberConfiguration& cfg, const HorizontalProfile& cusp,
                                 const CorrectionTarget& target, std::size_t normalize_on);

/// Unique vertical W with coefficient 0 on normalize_on such that
/// (weighted + W)·C = 0 for every component C other than normalize_on.
/// This is the vertical part of a pullback divisor whose horizontal
/// part has the given profile and whose support omits normalize_on.
VerticalDivisor solve_vertical_orthogonal(const FiberConfiguration& cfg,
                                          const HorizontalProfile& weighted,
                                          std::size_t normalize_on);

/// V·V; invariant under adding rational multiples of the full fibre.
Rational squared_correction(const VerticalDivisor& v, const FiberConfiguration& cfg);

struct CuspContribution {
    long b = 1;                    // ramification index of the cusp
    VerticalDivisor correction_f;  // against K/(2g-2)
    VerticalDivisor correction_g;  // against the branch-point pullback / d
};

/// -(2g/d) sum_j b_j G_j^2 + ((2g-2)/d) sum_j b_j F_j^2, the log-norm
/// coefficient aggregated over the cusps of a fibre of the covering.
Rational a_p_from_lattice(const FiberConfiguration& cfg,
                          const std::vector<CuspContribution>& cusps, long g, long d);

/// Single-cusp shortcut valid when all cusp contributions agree:
/// -2g G^2 + (2g-2) F^2.
Rational a_p_single_cusp(const FiberConfiguration& cfg, const VerticalDivisor& f,
                         const VerticalDivisor& g_corr, long g);

} // namespace fermatlat
