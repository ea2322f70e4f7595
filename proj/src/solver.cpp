#include "solver.hpp"

namespace fermatlat {

namespace {

// Assembles the intersection-matrix system with the normalize_on column
// removed (and optionally its row), solves, and scatters back to a full
// coefficient vector with 0 at normalize_on.
VerticalDivisor solve_normalized(const FiberConfiguration& cfg, const RationalVector& rhs,
                                 std::size_t normalize_on, bool drop_row) {
    const std::size_t n = cfg.size();
    if (normalize_on >= n)
        throw DimensionMismatch("normalization component out of range");
    std::vector<std::size_t> cols;
    cols.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
        if (j != normalize_on)
            cols.push_back(j);
    std::vector<std::size_t> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!drop_row || i != normalize_on)
            rows.push_back(i);

    std::vector<std::size_t> col_pos(n, n);
    for (std::size_t k = 0; k < cols.size(); ++k)
        col_pos[cols[k]] = k;

    std::vector<RationalVector> augmented;
    augmented.reserve(rows.size());
    for (std::size_t ri = 0; ri < rows.size(); ++ri)
        augmented.emplace_back(cols.size() + 1);
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        for (const auto& [j, v] : cfg.row(rows[ri]))
            if (col_pos[j] < n)
                augmented[ri][col_pos[j]] = Rational(v);
        augmented[ri][cols.size()] = rhs[rows[ri]];
    }

    const AffineSolution sol = solve_affine_rows(std::move(augmented), cols.size());
    if (!sol.kernel_basis.empty())
        throw NormalizationInKernelComplement(
            "normalizing on component " + cfg.component(normalize_on).label +
            " does not pin the solution; the kernel is larger than the full fibre");

    VerticalDivisor out = VerticalDivisor::zero(n);
    for (std::size_t k = 0; k < cols.size(); ++k)
        out.coeffs[cols[k]] = sol.particular[k];
    return out;
}

} // namespace

VerticalDivisor solve_canonical_vertical(const FiberConfiguration& cfg,
                                         const HorizontalProfile& cusp, long g,
                                         std::size_t normalize_on) {
    if (cusp.size() != cfg.size())
        throw DimensionMismatch("cusp profile not indexed by this configuration");
    if (g < 2)
        throw Error("genus must be at least 2");
    const long degree_k = 2 * g - 2;
    RationalVector rhs(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const Component& c = cfg.component(i);
        rhs[i] = Rational(2 * c.genus - 2 - c.self_intersection - degree_k * cusp.hits[i]);
    }
    return solve_normalized(cfg, rhs, normalize_on, /*drop_row=*/false);
}

VerticalDivisor solve_correction(const FiberConfiguration& cfg, const HorizontalProfile& cusp,
                                 const CorrectionTarget& target, std::size_t normalize_on) {
    if (cusp.size() != cfg.size() || target.horizontal.size() != cfg.size() ||
        target.vertical.size() != cfg.size())
        throw DimensionMismatch("correction target not indexed by this configuration");
    if (target.scale.is_zero())
        throw Error("correction target scale must be nonzero");
    // V·C = scale*(T·C) - cusp·C for every component C
    RationalVector rhs(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        Rational t_dot_c(target.horizontal.hits[i]);
        for (const auto& [j, v] : cfg.row(i))
            if (!target.vertical.coeffs[j].is_zero())
                t_dot_c += Rational(v) * target.vertical.coeffs[j];
        rhs[i] = target.scale * t_dot_c - Rational(cusp.hits[i]);
    }
    return solve_normalized(cfg, rhs, normalize_on, /*drop_row=*/false);
}

VerticalDivisor solve_vertical_orthogonal(const FiberConfiguration& cfg,
                                          const HorizontalProfile& weighted,
                                          std::size_t normalize_on) {
    if (weighted.size() != cfg.size())
        throw DimensionMismatch("profile not indexed by this configuration");
    RationalVector rhs(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i)
        rhs[i] = Rational(-weighted.hits[i]);
    return solve_normalized(cfg, rhs, normalize_on, /*drop_row=*/true);
}

Rational squared_correction(const VerticalDivisor& v, const FiberConfiguration& cfg) {
    return pair_vertical(v, v, cfg);
}

Rational a_p_from_lattice(const FiberConfiguration& cfg,
                          const std::vector<CuspContribution>& cusps, long g, long d) {
    if (cusps.empty())
        throw EmptyCuspList("a_p aggregation needs at least one cusp");
    if (d < 1)
        throw Error("covering degree must be positive");
    Rational sum_g2, sum_f2;
    for (const auto& cusp : cusps) {
        if (cusp.b < 1)
            throw Error("cusp ramification index must be positive");
        const Rational b(cusp.b);
        sum_g2 += b * squared_correction(cusp.correction_g, cfg);
        sum_f2 += b * squared_correction(cusp.correction_f, cfg);
    }
    return Rational(-2 * g, d) * sum_g2 + Rational(2 * g - 2, d) * sum_f2;
}

Rational a_p_single_cusp(const FiberConfiguration& cfg, const VerticalDivisor& f,
                         const VerticalDivisor& g_corr, long g) {
    return Rational(-2 * g) * squared_correction(g_corr, cfg) +
           Rational(2 * g - 2) * squared_correction(f, cfg);
}

} // namespace fermatlat
