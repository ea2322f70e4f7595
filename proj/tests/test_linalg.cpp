#include "linalg.hpp"

#include "fermat.hpp"
#include "solver.hpp"

#include <doctest.h>

#include <random>

using namespace fermatlat;

namespace {

RationalMatrix make(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const long v : row)
            m.at(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

} // namespace

TEST_CASE("identity system returns the right-hand side") {
    RationalMatrix m = make({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const RationalVector b{Rational(1, 2), Rational(0), Rational(-7)};
    const AffineSolution sol = solve_affine(m, b);
    CHECK(sol.particular == b);
    CHECK(sol.kernel_basis.empty());
}

TEST_CASE("rank-1 system yields particular (1,0) and kernel (1,-1)") {
    RationalMatrix m = make({{1, 1}, {2, 2}});
    const AffineSolution sol = solve_affine(m, {Rational(1), Rational(2)});
    CHECK(sol.particular == RationalVector{Rational(1), Rational(0)});
    REQUIRE(sol.kernel_basis.size() == 1);
    CHECK(sol.kernel_basis[0] == RationalVector{Rational(1), Rational(-1)});
}

TEST_CASE("inconsistent system reports a certificate row") {
    RationalMatrix m = make({{1, 1}, {2, 2}});
    try {
        solve_affine(m, {Rational(1), Rational(3)});
        FAIL("expected InconsistentSystem");
    } catch (const InconsistentSystem& e) {
        CHECK_FALSE(e.certificate_rhs.is_zero());
        for (const auto& c : e.certificate_coeffs)
            CHECK(c.is_zero());
        CHECK(e.original_row < 2);
    }
}

TEST_CASE("rectangular and zero matrices") {
    // over-determined but consistent
    RationalMatrix m = make({{1, 0}, {0, 1}, {1, 1}});
    const AffineSolution sol = solve_affine(m, {Rational(2), Rational(3), Rational(5)});
    CHECK(sol.particular == RationalVector{Rational(2), Rational(3)});

    // all-zero with zero rhs: everything is kernel
    RationalMatrix z(2, 2);
    const AffineSolution zs = solve_affine(z, {Rational(0), Rational(0)});
    CHECK(zs.kernel_basis.size() == 2);
    CHECK(zs.particular == RationalVector{Rational(0), Rational(0)});

    CHECK_THROWS_AS(solve_affine(z, {Rational(1)}), DimensionMismatch);
}

TEST_CASE("kernel vectors are normalized to leading entry one") {
    RationalMatrix m = make({{2, 4, 6}});
    const AffineSolution sol = solve_affine(m, {Rational(2)});
    REQUIRE(sol.kernel_basis.size() == 2);
    for (const auto& v : sol.kernel_basis) {
        Rational lead;
        for (const auto& x : v)
            if (!x.is_zero()) {
                lead = x;
                break;
            }
        CHECK(lead == Rational(1));
    }
}

TEST_CASE("solutions satisfy M(particular + random kernel combination) = b") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> entry(-4, 4);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = 2 + trial % 3;
        const std::size_t cols = 2 + (trial / 3) % 3;
        RationalMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Rational(entry(rng));
        // choose b in the column space so the system is solvable
        RationalVector x0(cols);
        for (auto& v : x0)
            v = Rational(entry(rng), 1 + (trial % 2));
        const RationalVector b = m.multiply(x0);

        const AffineSolution sol = solve_affine(m, b);
        RationalVector x = sol.particular;
        for (const auto& k : sol.kernel_basis) {
            const Rational t(coeff(rng));
            for (std::size_t j = 0; j < cols; ++j)
                x[j] += t * k[j];
        }
        CHECK(m.multiply(x) == b);
        for (const auto& k : sol.kernel_basis) {
            const RationalVector zero(rows);
            CHECK(m.multiply(k) == zero);
        }
    }
}

// The adjunction system of the p = 5 fibre with the central component's
// column removed: substituting the closed-form coefficients must satisfy
// it, and the solver must recover exactly those coefficients.
TEST_CASE("fermat adjunction system at p = 5 matches the closed-form solution") {
    for (const auto [r, s] : {std::pair<long, long>{0, 2}, std::pair<long, long>{1, 0}}) {
        const FermatModel model = build_fermat_model_with_split(5, r, s);
        const FiberConfiguration& cfg = model.cfg();
        const std::size_t n = cfg.size();
        const std::size_t l = model.component_index("L");
        const long g = model.genus();
        const std::size_t lx = model.cusp_component(CuspClass::X);

        RationalMatrix m(n, n - 1);
        RationalVector b(n);
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (j != l)
                cols.push_back(j);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < cols.size(); ++k)
                m.at(i, k) = Rational(cfg.intersection(i, cols[k]));
            b[i] = Rational(-2 - cfg.intersection(i, i) - (i == lx ? 2 * g - 2 : 0));
        }

        // closed forms: lambda_x = 7/5, others -3/5, alpha lines -6/5
        RationalVector lambda(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const std::string& label = cfg.component(cols[k]).label;
            if (label == "L_x")
                lambda[k] = Rational(7, 5);
            else if (label.starts_with("L_alpha_") && label.find('_', 8) == std::string::npos)
                lambda[k] = Rational(-6, 5);
            else
                lambda[k] = Rational(-3, 5);
        }
        CHECK(m.multiply(lambda) == b); // hand-checkable oracle
        const AffineSolution sol = solve_affine(m, b);
        CHECK(sol.kernel_basis.empty());
        CHECK(sol.particular == lambda);
    }
}
