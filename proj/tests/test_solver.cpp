#include "solver.hpp"

#include "fermat.hpp"
#include "pipeline.hpp"

#include <doctest.h>

#include <random>

using namespace fermatlat;

namespace {

Rational lambda_x(long p) { return Rational((p - 1) * (p - 2) - p, p); } // (2g-p)/p
Rational lambda_other(long p) { return Rational(-(p - 2), p); }
Rational lambda_alpha(long p) { return Rational(-2 * (p - 2), p); }

bool is_alpha_line(const std::string& label) {
    return label.starts_with("L_alpha_") && label.find('_', 8) == std::string::npos;
}

} // namespace

TEST_CASE("canonical vertical part matches the closed-form coefficients") {
    for (const long p : {5L, 7L, 11L, 13L}) {
        const FermatModel model = build_fermat_model(p);
        const FiberConfiguration& cfg = model.cfg();
        const VerticalDivisor v = solve_canonical_vertical(
            cfg, model.cusp_profile(CuspClass::X), model.genus(), model.component_index("L"));
        CHECK(v.coeffs[model.component_index("L")] == Rational(0));
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            const std::string& label = cfg.component(i).label;
            if (label == "L")
                continue;
            const Rational expected = label == "L_x"    ? lambda_x(p)
                                      : is_alpha_line(label) ? lambda_alpha(p)
                                                             : lambda_other(p);
            CHECK(v.coeffs[i] == expected);
        }
    }
}

TEST_CASE("p = 5 spot values, including the double-root coefficient") {
    CHECK(lambda_x(5) == Rational(7, 5));
    CHECK(lambda_other(5) == Rational(-3, 5));
    // the true split at 5 has no double roots; a synthetic one exercises them
    const FermatModel model = build_fermat_model_with_split(5, 1, 0);
    const VerticalDivisor v = solve_canonical_vertical(
        model.cfg(), model.cusp_profile(CuspClass::X), model.genus(), model.component_index("L"));
    CHECK(v.coeffs[model.component_index("L_x")] == Rational(7, 5));
    CHECK(v.coeffs[model.component_index("L_y")] == Rational(-3, 5));
    CHECK(v.coeffs[model.component_index("L_alpha_1")] == Rational(-6, 5));
    CHECK(v.coeffs[model.component_index("L_alpha_1_3")] == Rational(-3, 5));
}

TEST_CASE("swapping the cusp class exchanges the x and y roles") {
    const FermatModel model = build_fermat_model(7);
    const std::size_t l = model.component_index("L");
    const VerticalDivisor vx =
        solve_canonical_vertical(model.cfg(), model.cusp_profile(CuspClass::X), model.genus(), l);
    const VerticalDivisor vy =
        solve_canonical_vertical(model.cfg(), model.cusp_profile(CuspClass::Y), model.genus(), l);
    const std::size_t ix = model.component_index("L_x");
    const std::size_t iy = model.component_index("L_y");
    CHECK(vy.coeffs[iy] == vx.coeffs[ix]);
    CHECK(vy.coeffs[ix] == vx.coeffs[iy]);
    for (std::size_t i = 0; i < model.cfg().size(); ++i)
        if (i != ix && i != iy)
            CHECK(vy.coeffs[i] == vx.coeffs[i]);
}

TEST_CASE("correction against the canonical target is V/(2g-2)") {
    const FermatModel model = build_fermat_model(7);
    const std::size_t l = model.component_index("L");
    const VerticalDivisor v =
        solve_canonical_vertical(model.cfg(), model.cusp_profile(CuspClass::X), model.genus(), l);
    const VerticalDivisor f = solve_correction(model.cfg(), model.cusp_profile(CuspClass::X),
                                               canonical_target(model, v), l);
    CHECK(f == Rational(1, 2 * model.genus() - 2) * v);
}

TEST_CASE("correction against the branch-point pullback is L_class/p") {
    for (const long p : {5L, 7L}) {
        const FermatModel model = build_fermat_model(p);
        const std::size_t l = model.component_index("L");
        for (const CuspClass cls : kCuspClasses) {
            const VerticalDivisor g = solve_correction(model.cfg(), model.cusp_profile(cls),
                                                       beta_target(model, cls), l);
            for (std::size_t i = 0; i < model.cfg().size(); ++i)
                CHECK(g.coeffs[i] ==
                      (i == model.cusp_component(cls) ? Rational(1, p) : Rational(0)));
        }
    }
}

TEST_CASE("self-correction is zero") {
    const FermatModel model = build_fermat_model(5);
    const std::size_t l = model.component_index("L");
    const HorizontalProfile sx = model.cusp_profile(CuspClass::X);
    const CorrectionTarget self{sx, VerticalDivisor::zero(model.cfg().size()), Rational(1)};
    const VerticalDivisor v = solve_correction(model.cfg(), sx, self, l);
    CHECK(v == VerticalDivisor::zero(model.cfg().size()));
}

TEST_CASE("squared corrections") {
    const FermatAnalysis a5 = analyze_prime(5);
    CHECK(a5.cusps[0].f_squared == Rational(-17, 100));
    CHECK(a5.cusps[0].g_squared == Rational(-1, 5));
    CHECK(a5.cusps[0].s_dot_g == Rational(1, 5));

    const FermatAnalysis a7 = analyze_prime(7);
    CHECK(a7.cusps[0].g_squared == Rational(-1, 7));

    const FermatModel model = build_fermat_model(5);
    CHECK(squared_correction(full_fiber(model.cfg()), model.cfg()) == Rational(0));
}

TEST_CASE("squares and a_p are invariant under fibre shifts") {
    const FermatAnalysis analysis = analyze_prime(7);
    const FiberConfiguration& cfg = analysis.model.cfg();
    const VerticalDivisor fib = full_fiber(cfg);
    std::mt19937_64 rng(1234321);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational t(num(rng), den(rng));
        const VerticalDivisor f_shift = analysis.cusps[0].correction_f + t * fib;
        const VerticalDivisor g_shift = analysis.cusps[0].correction_g + t * fib;
        CHECK(squared_correction(f_shift, cfg) == analysis.cusps[0].f_squared);
        CHECK(squared_correction(g_shift, cfg) == analysis.cusps[0].g_squared);
        CHECK(a_p_single_cusp(cfg, f_shift, g_shift, analysis.model.genus()) == analysis.a_p);
    }
}

TEST_CASE("a_p aggregation") {
    CHECK(analyze_prime(5).a_p == Rational(7, 10));
    CHECK(analyze_prime(7).a_p == Rational(23, 28));
    CHECK(analyze_prime(11).a_p == Rational(79, 88));

    const FermatModel model = build_fermat_model(5);
    const std::size_t n = model.cfg().size();
    std::vector<CuspContribution> zeros(
        5, CuspContribution{5, VerticalDivisor::zero(n), VerticalDivisor::zero(n)});
    CHECK(a_p_from_lattice(model.cfg(), zeros, model.genus(), 25) == Rational(0));
    CHECK_THROWS_AS(a_p_from_lattice(model.cfg(), {}, model.genus(), 25), EmptyCuspList);
}

TEST_CASE("restricting the canonical part recovers the two sub-lemma squares") {
    for (const long p : {5L, 7L, 13L}) {
        const FermatAnalysis analysis = analyze_prime(p);
        const FiberConfiguration& cfg = analysis.model.cfg();
        const long g = analysis.model.genus();
        VerticalDivisor vx = VerticalDivisor::zero(cfg.size());
        VerticalDivisor vsigma = analysis.canonical_vertical;
        for (const char* label : {"L_x", "L_y", "L_z"}) {
            const std::size_t i = analysis.model.component_index(label);
            vx.coeffs[i] = analysis.canonical_vertical.coeffs[i];
            vsigma.coeffs[i] = Rational(0);
        }
        CHECK(pair_vertical(vsigma, vsigma, cfg) ==
              Rational((p - 3) * (-p)) * Rational(p - 2, p) * Rational(p - 2, p));
        CHECK(pair_vertical(vx, vx, cfg) ==
              Rational(-p) * Rational(2 * g - p, p) * Rational(2 * g - p, p) +
                  Rational(-2 * p) * Rational(p - 2, p) * Rational(p - 2, p));
        // the two restrictions are orthogonal, so F^2 splits as their sum
        CHECK(pair_vertical(vx, vsigma, cfg) == Rational(0));
    }
}

TEST_CASE("split independence of every derived quantity") {
    for (const long p : {11L, 13L}) {
        const FermatAnalysis reference = analyze_prime(p);
        for (long r = 0; 2 * r <= p - 3; ++r) {
            const FermatAnalysis synthetic =
                analyze(build_fermat_model_with_split(p, r, p - 3 - 2 * r));
            CHECK(synthetic.a_p == reference.a_p);
            CHECK(synthetic.cusps[0].f_squared == reference.cusps[0].f_squared);
            CHECK(synthetic.cusps[0].g_squared == reference.cusps[0].g_squared);
            CHECK(synthetic.bound_minimal_coeff == reference.bound_minimal_coeff);
            CHECK(synthetic.bound_folded_coeff == reference.bound_folded_coeff);
        }
    }
}

TEST_CASE("degenerate systems raise the documented errors") {
    // rank-deficient beyond the normalization: genus-1 pair with zero matrix
    const FiberConfiguration flat(5, {{"A", 1, 0, 1}, {"B", 1, 0, 1}}, {});
    HorizontalProfile none;
    none.hits.assign(2, 0);
    CHECK_THROWS_AS(solve_canonical_vertical(flat, none, 2, 0),
                    NormalizationInKernelComplement);

    // genus-0 pair: the adjunction right-hand side is unreachable
    const FiberConfiguration stuck(5, {{"A", 1, 0, 0}, {"B", 1, 0, 0}}, {});
    CHECK_THROWS_AS(solve_canonical_vertical(stuck, none, 2, 0), InconsistentSystem);

    const FermatModel model = build_fermat_model(5);
    CHECK_THROWS_AS(solve_canonical_vertical(model.cfg(), model.cusp_profile(CuspClass::X), 1,
                                             model.component_index("L")),
                    Error);
}
