#pragma once

#include "fermat.hpp"
#include "fiber.hpp"

#include <cstddef>
#include <vector>

namespace fermatlat {

/// Blow-down of a genus-0 component E with E^2 = -1. The target pairing
/// is C~·D~ = C·D + (C·E)(D·E); a target component pulls back to
/// C + (C·E)·E, multiplicities are unchanged.
struct Contraction {
    FiberConfiguration source;
    std::size_t contracted;
    FiberConfiguration target;

    // source index -> target index (the contracted component is skipped)
    std::size_t target_index(std::size_t source_index) const;
    std::size_t source_index(std::size_t target_index) const;
};

std::vector<std::size_t> contractible_components(const FiberConfiguration& cfg);

Contraction contract(const FiberConfiguration& cfg, std::size_t e);

VerticalDivisor pullback(const Contraction& ctr, const VerticalDivisor& on_target);

/// Pushforward of a horizontal profile: the hit on the contracted
/// component is redistributed onto its neighbours by the pullback rule.
HorizontalProfile transfer_profile(const Contraction& ctr, const HorizontalProfile& on_source);

struct MinimalModelReport {
    Contraction contraction;
    VerticalDivisor canonical_vertical;   // V with K = (2g-2)S_x + V on the source
    VerticalDivisor w;                    // pullback of the minimal canonical minus K
    Rational k_dot_w;                     // (p-2)^2 - (p-3)
    Rational w_dot_pullback_min;          // (p-2)(p-3)
    Rational correction;                  // 2 K·W + W^2 = 2p^2 - 10p + 13
    Rational minimal_adjunction_on_lx;    // K_min · L~_x = p - 3
    bool minimal_adjunction_all_zero;     // adjunction defects on the contracted model
    bool minimal_has_no_contractibles;
};

MinimalModelReport minimal_model_analysis(const FermatModel& model,
                                          const VerticalDivisor& canonical_vertical);

/// Coefficient of log p picked up when passing from the regular to the
/// minimal model; asserts the closed form 2p^2 - 10p + 13.
Rational minimal_model_correction(long p);

} // namespace fermatlat
