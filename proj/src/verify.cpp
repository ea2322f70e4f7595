#include "verify.hpp"

#include "bounds.hpp"
#include "pipeline.hpp"

#include <nlohmann/json.hpp>

#include <functional>

namespace fermatlat {

bool PrimeReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok)
            return false;
    return true;
}

std::vector<std::string> PrimeReport::failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.ok)
            out.push_back(c.name);
    return out;
}

std::string PrimeReport::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["r"] = r;
    j["s"] = s;
    j["a_p"] = a_p.str();
    j["ok"] = ok();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["ok"] = c.ok;
        if (!c.ok)
            jc["detail"] = c.detail;
        arr.push_back(std::move(jc));
    }
    j["checks"] = std::move(arr);
    return j.dump();
}

namespace {

struct Runner {
    std::vector<CheckResult>& checks;

    void run(const std::string& name, const std::function<std::string()>& body) const {
        CheckResult result{name, false, {}};
        try {
            result.detail = body(); // empty on success
            result.ok = result.detail.empty();
        } catch (const std::exception& e) {
            result.detail = e.what();
        }
        checks.push_back(std::move(result));
    }
};

std::string expect_equal(const Rational& got, const Rational& expected, const char* what) {
    if (got == expected)
        return {};
    return std::string(what) + ": got " + got.str() + ", expected " + expected.str();
}

} // namespace

PrimeReport verify_prime(long p, bool inject_fault) {
    PrimeReport report;
    report.p = p;

    const MirimanoffSplit split = mirimanoff_split(p);
    report.r = split.r;
    report.s = split.s;

    FermatModel model(p, split.r, split.s);
    FiberConfiguration cfg = model.cfg();
    if (inject_fault) {
        // bump one self-intersection; every lattice identity should trip
        auto comps = cfg.components();
        comps[model.cusp_component(CuspClass::X)].self_intersection += 1;
        cfg = FiberConfiguration(cfg.residue_char(), std::move(comps), cfg.edges());
    }

    Runner runner{report.checks};
    const long g = model.genus();
    const Rational degree_k(2 * g - 2);

    runner.run("mirimanoff_split", [&] {
        if (2 * split.r + split.s != p - 3)
            return std::string("2r + s != p - 3");
        return std::string();
    });

    runner.run("fiber_relation", [&] {
        const auto rel = check_fiber_relation(cfg);
        if (rel.all_zero())
            return std::string();
        return "nonzero defect on " + cfg.component(rel.nonzero.front()).label;
    });

    runner.run("component_census", [&] {
        const auto expected = static_cast<std::size_t>(4 + split.s + split.r + split.r * p);
        if (cfg.size() != expected)
            return std::string("component count mismatch");
        if (expect_equal(pair_vertical(full_fiber(cfg), full_fiber(cfg), cfg), Rational(0),
                         "fibre self-intersection")
                .empty())
            return std::string();
        return std::string("fibre self-intersection nonzero");
    });

    // everything below needs the solved lattice; run it on the possibly
    // corrupted configuration so the fault detection is end to end
    FermatModel working(p, split.r, split.s);
    const bool faulted = inject_fault;

    runner.run("lattice_pipeline", [&]() -> std::string {
        if (faulted) {
            // the corrupted matrix must not reproduce the closed forms
            const std::size_t l = *cfg.index_of("L");
            try {
                const VerticalDivisor v = solve_canonical_vertical(
                    cfg, HorizontalProfile::single(cfg.size(), *cfg.index_of("L_x")), g, l);
                const Rational lam_x = v.coeffs[*cfg.index_of("L_x")];
                if (lam_x == Rational(2 * g - p, p))
                    return "corrupted fibre still matches the closed form";
                return "corrupted fibre detected (lambda_x = " + lam_x.str() + ")";
            } catch (const std::exception&) {
                return "corrupted fibre detected (solver rejected the system)";
            }
        }
        return std::string();
    });

    if (faulted) {
        report.a_p = Rational(0);
        return report;
    }

    const FermatAnalysis analysis = analyze(std::move(working));
    report.a_p = analysis.a_p;
    const FiberConfiguration& acfg = analysis.model.cfg();
    const std::size_t lx = analysis.model.cusp_component(CuspClass::X);
    const std::size_t ly = analysis.model.cusp_component(CuspClass::Y);
    const std::size_t lz = analysis.model.cusp_component(CuspClass::Z);

    runner.run("adjunction", [&] {
        RationalVector horiz(acfg.size());
        horiz[lx] = degree_k;
        const auto defects = adjunction_defects(acfg, analysis.canonical_vertical, horiz);
        for (std::size_t i = 0; i < defects.size(); ++i)
            if (!defects[i].is_zero())
                return "nonzero adjunction defect on " + acfg.component(i).label;
        return std::string();
    });

    runner.run("lambda_closed_form", [&]() -> std::string {
        const Rational lam_x(2 * g - p, p), lam_other(-(p - 2), p), lam_alpha(-2 * (p - 2), p);
        const auto& v = analysis.canonical_vertical.coeffs;
        if (v[lx] != lam_x)
            return expect_equal(v[lx], lam_x, "lambda_x");
        for (std::size_t i = 0; i < acfg.size(); ++i) {
            const std::string& label = acfg.component(i).label;
            if (label == "L" || label == "L_x")
                continue;
            const bool is_alpha_line =
                label.starts_with("L_alpha_") && label.find('_', 8) == std::string::npos;
            const Rational expected = is_alpha_line ? lam_alpha : lam_other;
            if (v[i] != expected)
                return expect_equal(v[i], expected, label.c_str());
        }
        return std::string();
    });

    runner.run("k_degree", [&] {
        // K·(full fibre) = 2g - 2
        const VerticalDivisor fib = full_fiber(acfg);
        const Rational got = degree_k * pair_mixed(analysis.model.cusp_profile(CuspClass::X),
                                                   fib, acfg) +
                             pair_vertical(analysis.canonical_vertical, fib, acfg);
        return expect_equal(got, degree_k, "K·fibre");
    });

    runner.run("hlemma_vsigma_sq", [&] {
        VerticalDivisor vsigma = analysis.canonical_vertical;
        vsigma.coeffs[lx] = vsigma.coeffs[ly] = vsigma.coeffs[lz] = Rational(0);
        const Rational expected =
            Rational((p - 3) * (-p)) * Rational(p - 2, p) * Rational(p - 2, p);
        return expect_equal(pair_vertical(vsigma, vsigma, acfg), expected, "V_Sigma^2");
    });

    runner.run("hlemma_vx_sq", [&] {
        VerticalDivisor vx = VerticalDivisor::zero(acfg.size());
        vx.coeffs[lx] = analysis.canonical_vertical.coeffs[lx];
        vx.coeffs[ly] = analysis.canonical_vertical.coeffs[ly];
        vx.coeffs[lz] = analysis.canonical_vertical.coeffs[lz];
        const Rational expected = Rational(-p) * Rational(2 * g - p, p) * Rational(2 * g - p, p) +
                                  Rational(-2 * p) * Rational(p - 2, p) * Rational(p - 2, p);
        return expect_equal(pair_vertical(vx, vx, acfg), expected, "V_x^2");
    });

    runner.run("f_squared", [&] {
        const Rational expected(-(p * p * p - 7 * p * p + 15 * p - 8), p * p * (p - 3) * (p - 3));
        return expect_equal(analysis.cusps[0].f_squared, expected, "F^2");
    });

    runner.run("g_squared", [&] {
        return expect_equal(analysis.cusps[0].g_squared, Rational(-1, p), "G^2");
    });

    runner.run("s_dot_g", [&] {
        return expect_equal(analysis.cusps[0].s_dot_g, Rational(1, p), "S·G");
    });

    runner.run("cusp_symmetry", [&]() -> std::string {
        for (int i = 1; i < 3; ++i)
            if (analysis.cusps[i].f_squared != analysis.cusps[0].f_squared ||
                analysis.cusps[i].g_squared != analysis.cusps[0].g_squared)
                return "cusp classes disagree";
        // distinct cusp profiles never share a component
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (std::size_t k = 0; k < acfg.size(); ++k)
                    if (analysis.cusps[i].profile.hits[k] != 0 &&
                        analysis.cusps[j].profile.hits[k] != 0)
                        return "cusp classes share a component";
        return std::string();
    });

    runner.run("beta_degree", [&]() -> std::string {
        // (S+G)·C = 0 for C != L, (S+G)·L = 1/p, (p^2(S+G))·fibre = p^2
        const std::size_t l = analysis.model.component_index("L");
        for (const CuspClass cls : kCuspClasses) {
            const auto& sol = analysis.cusps[static_cast<int>(cls)];
            for (std::size_t i = 0; i < acfg.size(); ++i) {
                Rational v = Rational(sol.profile.hits[i]);
                for (const auto& [j, m] : acfg.row(i))
                    if (!sol.correction_g.coeffs[j].is_zero())
                        v += Rational(m) * sol.correction_g.coeffs[j];
                if (i == l ? v != Rational(1, p) : !v.is_zero())
                    return "branch-point pullback pairing failed on " + acfg.component(i).label;
            }
            const VerticalDivisor fib = full_fiber(acfg);
            const Rational through_fiber =
                Rational(p * p) * (pair_mixed(sol.profile, fib, acfg) +
                                   pair_vertical(sol.correction_g, fib, acfg));
            if (through_fiber != Rational(p * p))
                return "fibre degree of the pullback is not p^2";
        }
        return std::string();
    });

    runner.run("ap_closed_form", [&] {
        return expect_equal(analysis.a_p, Rational(p * p - 4 * p + 2, p * (p - 3)), "a_p");
    });

    runner.run("prop_change", [&]() -> std::string {
        auto err = expect_equal(analysis.minimal.k_dot_w, Rational((p - 2) * (p - 2) - (p - 3)),
                                "K·W");
        if (!err.empty())
            return err;
        err = expect_equal(analysis.minimal.w_dot_pullback_min, Rational((p - 2) * (p - 3)),
                           "W·pullback(K_min)");
        if (!err.empty())
            return err;
        return expect_equal(analysis.minimal.correction, Rational(2 * p * p - 10 * p + 13),
                            "2K·W + W^2");
    });

    runner.run("minimal_adjunction", [&]() -> std::string {
        if (!analysis.minimal.minimal_adjunction_all_zero)
            return "adjunction fails on the contracted model";
        auto err =
            expect_equal(analysis.minimal.minimal_adjunction_on_lx, Rational(p - 3), "K_min·L~_x");
        if (!err.empty())
            return err;
        if (!analysis.minimal.minimal_has_no_contractibles)
            return "contracted model still has a (-1)-curve";
        const auto sources = contractible_components(acfg);
        if (sources.size() != 1 || sources.front() != analysis.model.component_index("L"))
            return "regular model should have exactly L contractible";
        return std::string();
    });

    runner.run("bound_identities", [&]() -> std::string {
        auto err = expect_equal(analysis.bound_minimal_coeff,
                                Rational(3 * p * p - 14 * p + 15, p * (p - 3)), "minimal coeff");
        if (!err.empty())
            return err;
        err = expect_equal(analysis.bound_folded_coeff, Rational(2 * p * p - p - 5, p),
                           "folded coeff");
        if (!err.empty())
            return err;
        if (Rational(2 * p * p * p - 7 * p * p - 2 * p + 15) !=
            analysis.bound_folded_coeff * Rational(p) * Rational(p - 3))
            return "folded polynomial identity failed";
        if (!(analysis.bound_minimal_coeff > analysis.bound_regular_coeff))
            return "minimal coefficient not larger than regular";
        if (!(Rational(2 * p - 5) <= analysis.bound_folded_coeff &&
              analysis.bound_folded_coeff <= Rational(2 * p)))
            return "folded coefficient outside [2p-5, 2p]";
        return std::string();
    });

    runner.run("w_regression", [&]() -> std::string {
        // W = -lam_y L_y - lam_z L_z - (2-p)/p L_x - V_Sigma + ((2g-2)/p) L
        // up to a rational multiple of the full fibre
        VerticalDivisor expected = VerticalDivisor::zero(acfg.size());
        const auto& v = analysis.canonical_vertical.coeffs;
        for (std::size_t i = 0; i < acfg.size(); ++i) {
            const std::string& label = acfg.component(i).label;
            if (label == "L")
                expected.coeffs[i] = Rational(2 * g - 2, p);
            else if (label == "L_x")
                expected.coeffs[i] = Rational(-(2 - p), p);
            else
                expected.coeffs[i] = -v[i];
        }
        VerticalDivisor diff = analysis.minimal.w - expected;
        const Rational t = diff.coeffs[0] / Rational(acfg.component(0).multiplicity);
        for (std::size_t i = 0; i < acfg.size(); ++i)
            if (diff.coeffs[i] != t * Rational(acfg.component(i).multiplicity))
                return "W differs from the printed form by more than a fibre multiple";
        return std::string();
    });

    return report;
}

} // namespace fermatlat
