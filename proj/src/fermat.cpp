#include "fermat.hpp"

#include "modpoly.hpp"

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace fermatlat {

namespace {

// phi(X,-1) = ((X-1)^p - X^p + 1)/p reduced mod p, from exact integer
// binomial coefficients.
ModPoly mirimanoff_poly(long p) {
    const auto up = static_cast<unsigned long>(p);
    std::vector<std::uint64_t> coeffs(p, 0);
    mpz_class binom, tmp;
    for (long k = 1; k < p; ++k) {
        mpz_bin_uiui(binom.get_mpz_t(), up, static_cast<unsigned long>(k));
        // coefficient of X^k in (X-1)^p - X^p + 1 is C(p,k)(-1)^(p-k)
        if ((p - k) % 2 != 0)
            binom = -binom;
        if (!mpz_divisible_ui_p(binom.get_mpz_t(), up))
            throw SplitInconsistent("binomial coefficient not divisible by p");
        mpz_divexact_ui(tmp.get_mpz_t(), binom.get_mpz_t(), up);
        mpz_mod_ui(tmp.get_mpz_t(), tmp.get_mpz_t(), up);
        coeffs[static_cast<std::size_t>(k)] = mpz_get_ui(tmp.get_mpz_t());
    }
    return ModPoly(static_cast<std::uint64_t>(p), std::move(coeffs));
}

// sum_{k=1}^{p-1} X^k / k mod p, the classical congruent form.
ModPoly mirimanoff_poly_congruence(long p) {
    const auto up = static_cast<std::uint64_t>(p);
    std::vector<std::uint64_t> coeffs(p, 0);
    for (long k = 1; k < p; ++k)
        coeffs[static_cast<std::size_t>(k)] = mod_inverse(static_cast<std::uint64_t>(k), up);
    return ModPoly(up, std::move(coeffs));
}

} // namespace

MirimanoffSplit mirimanoff_split(long p) {
    if (!is_prime(p))
        throw NotPrime(p);
    if (p <= 3)
        throw NotPrime(p, std::to_string(p) + " is prime but the model needs p > 3");
    const auto up = static_cast<std::uint64_t>(p);

    const ModPoly f = mirimanoff_poly(p);
    if (f.degree() != p - 1 || f.coeff(static_cast<std::size_t>(p - 1)) != up - 1)
        throw SplitInconsistent("phi(X,-1) has unexpected degree or leading coefficient");
    if (f != mirimanoff_poly_congruence(p))
        throw SplitInconsistent("binomial and congruence computations of phi(X,-1) disagree");

    // distinct F_p roots: gcd(f, X^p - X)
    const ModPoly xp = ModPoly::pow_x_mod(up, f);
    const ModPoly c = ModPoly::gcd(f, xp - ModPoly::x(up));
    if (c.eval(0) != 0 || c.eval(1) != 0)
        throw SplitInconsistent("0 and 1 must be roots of phi(X,-1)");
    ModPoly c0 = ModPoly::divmod(c, ModPoly::x(up) * ModPoly::x_minus(up, 1)).first;
    {
        const auto [q, rem] = ModPoly::divmod(c, c0 * ModPoly::x(up) * ModPoly::x_minus(up, 1));
        if (!rem.is_zero() || q.degree() != 0)
            throw SplitInconsistent("root product does not factor as X(X-1)c0");
    }
    const long r = c0.degree();

    // multiplicity pattern via the derivative
    const ModPoly g1 = ModPoly::gcd(f, f.derivative());
    if (g1.eval(0) == 0 || g1.eval(1) == 0)
        throw SplitInconsistent("0 or 1 is a multiple root");
    if (ModPoly::gcd(g1, c) != c0.monic())
        throw SplitInconsistent("multiple-root locus does not match the non-{0,1} roots");

    // divide out X(X-1) and the squared double roots; the cofactor must
    // have no F_p root (multiplicities were exactly 2) and be squarefree
    const ModPoly squares = c0 * c0 * ModPoly::x(up) * ModPoly::x_minus(up, 1);
    const auto [q, rem] = ModPoly::divmod(f, squares);
    if (!rem.is_zero())
        throw SplitInconsistent("a root has multiplicity other than its expected value");
    if (!q.is_zero() && q.degree() >= 1) {
        const ModPoly xq = ModPoly::pow_x_mod(up, q);
        if (ModPoly::gcd(q, xq - ModPoly::x(up)).degree() != 0)
            throw SplitInconsistent("cofactor still has a root in F_p");
        if (ModPoly::gcd(q, q.derivative()).degree() != 0)
            throw SplitInconsistent("cofactor is not squarefree");
    }

    const long s = p - 3 - 2 * r;
    if (s != q.degree() || s < 0)
        throw SplitInconsistent("degree bookkeeping 2r + s = p - 3 failed");

    MirimanoffSplit split;
    split.r = r;
    split.s = s;
    for (std::uint64_t a = 0; a < up && split.roots.size() < static_cast<std::size_t>(r); ++a)
        if (c0.eval(a) == 0)
            split.roots.push_back(static_cast<long>(a));
    if (split.roots.size() != static_cast<std::size_t>(r))
        throw SplitInconsistent("could not enumerate the double roots");
    return split;
}

const char* cusp_class_name(CuspClass c) {
    switch (c) {
    case CuspClass::X: return "x";
    case CuspClass::Y: return "y";
    case CuspClass::Z: return "z";
    }
    return "?";
}

namespace {

FiberConfiguration make_fermat_cfg(long p, long r, long s) {
    std::vector<Component> comps;
    std::vector<Edge> edges;
    comps.push_back({"L", p, -1, 0});
    for (const char* name : {"L_x", "L_y", "L_z"}) {
        edges.push_back({0, comps.size(), 1});
        comps.push_back({name, 1, -p, 0});
    }
    for (long i = 1; i <= s; ++i) {
        edges.push_back({0, comps.size(), 1});
        comps.push_back({"L_beta_" + std::to_string(i), 1, -p, 0});
    }
    for (long i = 1; i <= r; ++i) {
        const std::size_t alpha = comps.size();
        edges.push_back({0, alpha, 1});
        comps.push_back({"L_alpha_" + std::to_string(i), 2, -p, 0});
        for (long j = 1; j <= p; ++j) {
            edges.push_back({alpha, comps.size(), 1});
            comps.push_back({"L_alpha_" + std::to_string(i) + "_" + std::to_string(j), 1, -2, 0});
        }
    }
    return FiberConfiguration(p, std::move(comps), edges);
}

} // namespace

FermatModel::FermatModel(long p, long r, long s)
    : p_(p), r_(r), s_(s), cfg_(make_fermat_cfg(p, r, s)) {
    const auto report = check_fiber_relation(cfg_);
    if (!report.all_zero())
        throw Error("fermat fibre violates the fiber relation; construction is corrupt");
    cusp_component_ = {component_index("L_x"), component_index("L_y"), component_index("L_z")};
}

std::size_t FermatModel::component_index(const std::string& label) const {
    const auto idx = cfg_.index_of(label);
    if (!idx)
        throw Error("no component labelled " + label);
    return *idx;
}

HorizontalProfile FermatModel::cusp_profile(CuspClass c) const {
    return HorizontalProfile::single(cfg_.size(), cusp_component(c));
}

std::string FermatModel::to_json() const {
    nlohmann::ordered_json cfg_json = nlohmann::ordered_json::parse(cfg_.to_json());
    nlohmann::ordered_json j;
    j["p"] = p_;
    j["split"] = {{"r", r_}, {"s", s_}};
    j["components"] = cfg_json["components"];
    j["edges"] = cfg_json["edges"];
    return j.dump(2);
}

std::string FermatModel::to_dot() const {
    return cfg_.to_dot();
}

FermatModel build_fermat_model(long p) {
    const MirimanoffSplit split = mirimanoff_split(p);
    return FermatModel(p, split.r, split.s);
}

FermatModel build_fermat_model_with_split(long p, long r, long s) {
    if (!is_prime(p))
        throw NotPrime(p);
    if (p <= 3)
        throw NotPrime(p, std::to_string(p) + " is prime but the model needs p > 3");
    if (r < 0 || s < 0 || 2 * r + s != p - 3)
        throw BadSplit("split (" + std::to_string(r) + "," + std::to_string(s) +
                       ") violates 2r + s = p - 3");
    return FermatModel(p, r, s);
}

} // namespace fermatlat
