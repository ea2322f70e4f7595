#pragma once

#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fermatlat {

bool is_prime(long n);

struct Component {
    std::string label;
    long multiplicity = 1;
    long self_intersection = 0;
    long genus = 0;
};

struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    long count = 1;
};

/// Decorated intersection lattice of one special fibre: components with
/// multiplicities, self-intersections and genera, plus the symmetric
/// pairwise intersection matrix. Immutable once constructed; all
/// pairings below are pure, so configurations are safe to share across
/// threads. Only the fibre at the single bad prime is ever materialized,
/// with residue field F_p (residue degree 1 throughout).
class FiberConfiguration {
public:
    FiberConfiguration(long residue_char, std::vector<Component> components,
                       const std::vector<Edge>& edges);

    long residue_char() const { return p_; }
    std::size_t size() const { return components_.size(); }
    const Component& component(std::size_t i) const { return components_[i]; }
    const std::vector<Component>& components() const { return components_; }
    std::vector<Edge> edges() const;

    long intersection(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> index_of(const std::string& label) const;

    // Nonzero entries of row i as (column, value), diagonal included.
    const std::vector<std::pair<std::size_t, long>>& row(std::size_t i) const { return adj_[i]; }

    std::string to_json() const;
    std::string to_dot() const;

private:
    long p_;
    std::vector<Component> components_;
    std::vector<long> matrix_; // dense symmetric, size() x size()
    std::vector<std::vector<std::pair<std::size_t, long>>> adj_;
};

/// Rational coefficient vector over the components of a configuration.
struct VerticalDivisor {
    RationalVector coeffs;

    static VerticalDivisor zero(std::size_t n) { return {RationalVector(n)}; }
    static VerticalDivisor unit(std::size_t n, std::size_t i);

    std::size_t size() const { return coeffs.size(); }

    VerticalDivisor& operator+=(const VerticalDivisor& o);
    VerticalDivisor& operator-=(const VerticalDivisor& o);
    VerticalDivisor& operator*=(const Rational& t);

    friend VerticalDivisor operator+(VerticalDivisor a, const VerticalDivisor& b) { return a += b; }
    friend VerticalDivisor operator-(VerticalDivisor a, const VerticalDivisor& b) { return a -= b; }
    friend VerticalDivisor operator*(const Rational& t, VerticalDivisor d) { return d *= t; }

    friend bool operator==(const VerticalDivisor&, const VerticalDivisor&) = default;
};

/// Intersection multiplicities of a horizontal divisor with each fibre
/// component. For a single rational section exactly one entry is 1; a
/// weighted sum of sections (such as a branch-point pullback) carries
/// the accumulated counts.
struct HorizontalProfile {
    std::vector<long> hits;

    static HorizontalProfile single(std::size_t n, std::size_t i);

    std::size_t size() const { return hits.size(); }

    friend bool operator==(const HorizontalProfile&, const HorizontalProfile&) = default;
};

Rational pair_vertical(const VerticalDivisor& d1, const VerticalDivisor& d2,
                       const FiberConfiguration& cfg);

Rational pair_mixed(const HorizontalProfile& profile, const VerticalDivisor& d,
                    const FiberConfiguration& cfg);

VerticalDivisor full_fiber(const FiberConfiguration& cfg);

struct FiberRelationReport {
    RationalVector defects; // (full fibre)·C per component
    std::vector<std::size_t> nonzero;

    bool all_zero() const { return nonzero.empty(); }
};

FiberRelationReport check_fiber_relation(const FiberConfiguration& cfg);

/// 2 genus(C) - 2 - C^2 - K·C where K·C is assembled from the canonical
/// divisor's vertical part plus the precomputed horizontal pairing.
Rational adjunction_defect(const FiberConfiguration& cfg, const VerticalDivisor& k_vertical,
                           const RationalVector& k_horizontal_pairing, std::size_t component);

/// All components at once; one matrix-vector product instead of n pairings.
RationalVector adjunction_defects(const FiberConfiguration& cfg, const VerticalDivisor& k_vertical,
                                  const RationalVector& k_horizontal_pairing);

} // namespace fermatlat
