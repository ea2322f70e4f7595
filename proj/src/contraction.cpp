#include "contraction.hpp"

#include "solver.hpp"

#include <utility>

namespace fermatlat {

std::size_t Contraction::target_index(std::size_t si) const {
    if (si == contracted || si >= source.size())
        throw DimensionMismatch("no target image for this source component");
    return si < contracted ? si : si - 1;
}

std::size_t Contraction::source_index(std::size_t ti) const {
    if (ti >= target.size())
        throw DimensionMismatch("target component out of range");
    return ti < contracted ? ti : ti + 1;
}

std::vector<std::size_t> contractible_components(const FiberConfiguration& cfg) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        const Component& c = cfg.component(i);
        if (c.self_intersection == -1 && c.genus == 0)
            out.push_back(i);
    }
    return out;
}

Contraction contract(const FiberConfiguration& cfg, std::size_t e) {
    if (e >= cfg.size())
        throw DimensionMismatch("component index out of range");
    const Component& exc = cfg.component(e);
    if (exc.self_intersection != -1 || exc.genus != 0)
        throw NotContractible("component " + exc.label +
                              " is not a genus-0 curve with self-intersection -1");

    const std::size_t n = cfg.size();
    std::vector<Component> comps;
    comps.reserve(n - 1);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != e) {
            keep.push_back(i);
            comps.push_back(cfg.component(i));
        }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < keep.size(); ++a) {
        const long ae = cfg.intersection(keep[a], e);
        comps[a].self_intersection = cfg.intersection(keep[a], keep[a]) + ae * ae;
        for (std::size_t b = a + 1; b < keep.size(); ++b) {
            const long v = cfg.intersection(keep[a], keep[b]) + ae * cfg.intersection(keep[b], e);
            if (v != 0)
                edges.push_back({a, b, v});
        }
    }
    Contraction ctr{cfg, e, FiberConfiguration(cfg.residue_char(), std::move(comps), edges)};
    if (check_fiber_relation(cfg).all_zero() && !check_fiber_relation(ctr.target).all_zero())
        throw Error("contraction broke the fiber relation; pairing update is corrupt");
    return ctr;
}

VerticalDivisor pullback(const Contraction& ctr, const VerticalDivisor& on_target) {
    if (on_target.size() != ctr.target.size())
        throw DimensionMismatch("divisor not indexed by the contraction target");
    VerticalDivisor out = VerticalDivisor::zero(ctr.source.size());
    Rational on_e;
    for (std::size_t ti = 0; ti < ctr.target.size(); ++ti) {
        const std::size_t si = ctr.source_index(ti);
        out.coeffs[si] = on_target.coeffs[ti];
        if (!on_target.coeffs[ti].is_zero())
            on_e += Rational(ctr.source.intersection(si, ctr.contracted)) * on_target.coeffs[ti];
    }
    out.coeffs[ctr.contracted] = on_e;
    return out;
}

HorizontalProfile transfer_profile(const Contraction& ctr, const HorizontalProfile& on_source) {
    if (on_source.size() != ctr.source.size())
        throw DimensionMismatch("profile not indexed by the contraction source");
    HorizontalProfile out;
    out.hits.resize(ctr.target.size());
    const long he = on_source.hits[ctr.contracted];
    for (std::size_t ti = 0; ti < ctr.target.size(); ++ti) {
        const std::size_t si = ctr.source_index(ti);
        out.hits[ti] = on_source.hits[si] + ctr.source.intersection(si, ctr.contracted) * he;
    }
    return out;
}

MinimalModelReport minimal_model_analysis(const FermatModel& model,
                                          const VerticalDivisor& canonical_vertical) {
    const FiberConfiguration& cfg = model.cfg();
    const long p = model.p();
    const long degree_k = 2 * model.genus() - 2;
    const std::size_t l = model.component_index("L");
    const std::size_t lx = model.cusp_component(CuspClass::X);

    Contraction ctr = contract(cfg, l);
    const std::size_t lx_t = ctr.target_index(lx);
    const HorizontalProfile sx_t = transfer_profile(ctr, model.cusp_profile(CuspClass::X));

    // K_min = (2g-2)(S_x + (1/p) L~_x) on the target
    VerticalDivisor v_min = VerticalDivisor::zero(ctr.target.size());
    v_min.coeffs[lx_t] = Rational(degree_k, p);

    // adjunction on the minimal model
    RationalVector k_horiz(ctr.target.size());
    for (std::size_t i = 0; i < ctr.target.size(); ++i)
        k_horiz[i] = Rational(degree_k * sx_t.hits[i]);
    const RationalVector defects = adjunction_defects(ctr.target, v_min, k_horiz);
    bool adj_ok = true;
    for (const auto& d : defects)
        if (!d.is_zero())
            adj_ok = false;

    Rational min_adj_lx = Rational(degree_k) * (Rational(sx_t.hits[lx_t]) +
                                                Rational(1, p) *
                                                    Rational(ctr.target.intersection(lx_t, lx_t)));

    // W = pullback(K_min) - K, a vertical divisor since the horizontal
    // parts agree (the cusp section misses the contracted component)
    const VerticalDivisor pb_v_min = pullback(ctr, v_min);
    const VerticalDivisor w = pb_v_min - canonical_vertical;

    const HorizontalProfile sx = model.cusp_profile(CuspClass::X);
    const Rational k_dot_w = Rational(degree_k) * pair_mixed(sx, w, cfg) +
                             pair_vertical(canonical_vertical, w, cfg);
    const Rational w_dot_pb = Rational(degree_k) * pair_mixed(sx, w, cfg) +
                              pair_vertical(pb_v_min, w, cfg);
    const Rational correction = Rational(2) * k_dot_w + pair_vertical(w, w, cfg);

    const bool no_contractibles = contractible_components(ctr.target).empty();
    MinimalModelReport report{std::move(ctr), canonical_vertical, w,         k_dot_w,
                              w_dot_pb,       correction,         min_adj_lx, adj_ok,
                              no_contractibles};
    return report;
}

Rational minimal_model_correction(long p) {
    const FermatModel model = build_fermat_model(p);
    const std::size_t l = model.component_index("L");
    const VerticalDivisor v =
        solve_canonical_vertical(model.cfg(), model.cusp_profile(CuspClass::X), model.genus(), l);
    const MinimalModelReport report = minimal_model_analysis(model, v);
    const Rational expected(2 * p * p - 10 * p + 13);
    if (report.correction != expected)
        throw Error("minimal-model correction mismatch at p = " + std::to_string(p) + ": got " +
                    report.correction.str() + ", expected " + expected.str());
    return report.correction;
}

} // namespace fermatlat
