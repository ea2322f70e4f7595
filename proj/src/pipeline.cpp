#include "pipeline.hpp"

#include <utility>

namespace fermatlat {

CorrectionTarget canonical_target(const FermatModel& model,
                                  const VerticalDivisor& canonical_vertical) {
    const long degree_k = 2 * model.genus() - 2;
    HorizontalProfile h;
    h.hits.assign(model.cfg().size(), 0);
    h.hits[model.cusp_component(CuspClass::X)] = degree_k;
    return {std::move(h), canonical_vertical, Rational(1, degree_k)};
}

CorrectionTarget beta_target(const FermatModel& model, CuspClass cls) {
    const long d = model.degree();
    HorizontalProfile h;
    h.hits.assign(model.cfg().size(), 0);
    // p cusps over the branch point, each of ramification index p and
    // each meeting exactly the class component once
    h.hits[model.cusp_component(cls)] = d;
    const std::size_t l = model.component_index("L");
    // the central component dominates the base, so the pullback omits
    // it; the rest of the vertical part is pinned by orthogonality
    VerticalDivisor vertical = solve_vertical_orthogonal(model.cfg(), h, l);
    return {std::move(h), std::move(vertical), Rational(1, d)};
}

FermatAnalysis analyze(FermatModel model) {
    const FiberConfiguration& cfg = model.cfg();
    const long p = model.p();
    const long g = model.genus();
    const std::size_t l = model.component_index("L");

    VerticalDivisor canonical =
        solve_canonical_vertical(cfg, model.cusp_profile(CuspClass::X), g, l);
    const CorrectionTarget k_target = canonical_target(model, canonical);

    std::array<CuspSolution, 3> cusps{CuspSolution{}, CuspSolution{}, CuspSolution{}};
    for (const CuspClass cls : kCuspClasses) {
        CuspSolution& sol = cusps[static_cast<int>(cls)];
        sol.profile = model.cusp_profile(cls);
        sol.correction_f = solve_correction(cfg, sol.profile, k_target, l);
        sol.correction_g = solve_correction(cfg, sol.profile, beta_target(model, cls), l);
        sol.f_squared = squared_correction(sol.correction_f, cfg);
        sol.g_squared = squared_correction(sol.correction_g, cfg);
        sol.s_dot_g = pair_mixed(sol.profile, sol.correction_g, cfg);
        sol.s_plus_g_dot_l =
            pair_vertical(sol.correction_g, VerticalDivisor::unit(cfg.size(), l), cfg);
    }
    for (const CuspClass cls : {CuspClass::Y, CuspClass::Z})
        if (cusps[static_cast<int>(cls)].f_squared != cusps[0].f_squared ||
            cusps[static_cast<int>(cls)].g_squared != cusps[0].g_squared)
            throw Error("cusp classes disagree on correction squares at p = " + std::to_string(p));

    // aggregate over the fibre of one branch point: p cusps, each b_j = p
    const CuspSolution& rep = cusps[static_cast<int>(CuspClass::Z)];
    std::vector<CuspContribution> contributions(
        static_cast<std::size_t>(model.cusps_per_class()),
        CuspContribution{model.b_max(), rep.correction_f, rep.correction_g});
    const Rational a_p = a_p_from_lattice(cfg, contributions, g, model.degree());
    const Rational a_p_single = a_p_single_cusp(cfg, rep.correction_f, rep.correction_g, g);
    if (a_p != a_p_single)
        throw Error("aggregated and single-cusp coefficients disagree at p = " + std::to_string(p));

    MinimalModelReport minimal = minimal_model_analysis(model, canonical);

    const Rational degree_k(2 * g - 2);
    const Rational regular = a_p;
    const Rational minimal_coeff = regular + minimal.correction / degree_k;
    const Rational folded = Rational(2 * (p - 2)) + minimal_coeff;

    FermatAnalysis out{std::move(model), std::move(canonical), std::move(cusps),
                       a_p,              a_p_single,           std::move(minimal),
                       regular,          minimal_coeff,        folded};
    return out;
}

FermatAnalysis analyze_prime(long p) {
    return analyze(build_fermat_model(p));
}

} // namespace fermatlat
