#pragma once

#include "rational.hpp"

#include <string>

namespace fermatlat {

enum class ModelKind { Regular, Minimal };

/// Right-hand side of the self-intersection upper bound, with the
/// analytic block kept symbolic: genus_factor * ( disc_coeff*log|D| +
/// degree*(k1*log b_max + k2) + logp_coeff*log p ). k1 and k2 are never
/// given numeric values; the expression only ever states an upper bound.
struct BoundExpression {
    long p = 0;
    ModelKind model = ModelKind::Regular;
    Rational genus_factor; // 2g - 2
    Rational disc_coeff;   // 2, or 0 once folded into logp_coeff
    long degree = 0;       // [E:Q]
    long b_max = 0;
    Rational logp_coeff;
    bool folded = false;

    friend bool operator==(const BoundExpression&, const BoundExpression&) = default;
};

/// Bound on the regular model; the log p coefficient is computed through
/// the full lattice pipeline and asserted against the closed form
/// (p^2-4p+2)/(p(p-3)).
BoundExpression bound_regular(long p);

/// Bound on the minimal model: regular coefficient plus the blow-down
/// correction divided by 2g-2; asserted against (3p^2-14p+15)/(p(p-3)).
BoundExpression bound_minimal(long p);

/// Substitutes log|D| = (p-2) log p for the cyclotomic field and merges
/// the discriminant term into the log p coefficient, (2p^2-p-5)/p.
BoundExpression fold_cyclotomic(const BoundExpression& expr);

struct BoundSet {
    BoundExpression regular;
    BoundExpression minimal;
    BoundExpression folded;
};

/// All three expressions from a single pass over the lattice pipeline.
BoundSet bound_set(long p);

std::string render_text(const BoundExpression& expr);
std::string render_json(const BoundExpression& expr);
BoundExpression parse_bound_json(const std::string& text);

} // namespace fermatlat
