#include "bounds.hpp"

#include "errors.hpp"
#include "pipeline.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace fermatlat {

namespace {

BoundExpression make_expression(long p, ModelKind kind, Rational logp_coeff) {
    BoundExpression expr;
    expr.p = p;
    expr.model = kind;
    expr.genus_factor = Rational(p * (p - 3)); // 2g - 2
    expr.disc_coeff = Rational(2);
    expr.degree = p - 1;
    expr.b_max = p;
    expr.logp_coeff = std::move(logp_coeff);
    expr.folded = false;
    return expr;
}

} // namespace

namespace {

BoundExpression regular_from(const FermatAnalysis& analysis) {
    const long p = analysis.model.p();
    const Rational closed(p * p - 4 * p + 2, p * (p - 3));
    if (analysis.bound_regular_coeff != closed)
        throw Error("regular-model log p coefficient mismatch at p = " + std::to_string(p) +
                    ": got " + analysis.bound_regular_coeff.str() + ", expected " + closed.str());
    return make_expression(p, ModelKind::Regular, closed);
}

BoundExpression minimal_from(const FermatAnalysis& analysis) {
    const long p = analysis.model.p();
    const Rational closed(3 * p * p - 14 * p + 15, p * (p - 3));
    if (analysis.bound_minimal_coeff != closed)
        throw Error("minimal-model log p coefficient mismatch at p = " + std::to_string(p) +
                    ": got " + analysis.bound_minimal_coeff.str() + ", expected " + closed.str());
    // (2g-2) a_p + (2p^2-10p+13) = (2g-2)(3p^2-14p+15)/(p(p-3)) with 2g-2 = p(p-3)
    const Rational lhs = Rational(p * (p - 3)) * analysis.bound_regular_coeff +
                         Rational(2 * p * p - 10 * p + 13);
    if (lhs != Rational(p * (p - 3)) * closed)
        throw Error("regular-to-minimal identity failed at p = " + std::to_string(p));
    return make_expression(p, ModelKind::Minimal, closed);
}

} // namespace

BoundExpression bound_regular(long p) {
    return regular_from(analyze_prime(p));
}

BoundExpression bound_minimal(long p) {
    return minimal_from(analyze_prime(p));
}

BoundSet bound_set(long p) {
    const FermatAnalysis analysis = analyze_prime(p);
    BoundSet set{regular_from(analysis), minimal_from(analysis), BoundExpression{}};
    set.folded = fold_cyclotomic(set.minimal);
    return set;
}

BoundExpression fold_cyclotomic(const BoundExpression& expr) {
    if (expr.model != ModelKind::Minimal || expr.folded)
        throw WrongExpressionKind("folding applies to an unfolded minimal-model bound");
    const long p = expr.p;
    // log|D| = (p-2) log p for Q(zeta_p); the disc term joins the log p block
    BoundExpression out = expr;
    out.logp_coeff = expr.logp_coeff + expr.disc_coeff * Rational(p - 2);
    out.disc_coeff = Rational(0);
    out.folded = true;
    const Rational closed(2 * p * p - p - 5, p);
    if (out.logp_coeff != closed)
        throw Error("folded coefficient mismatch at p = " + std::to_string(p));
    if (Rational(2 * p * p * p - 7 * p * p - 2 * p + 15) !=
        Rational(2 * p * p - p - 5) * Rational(p - 3))
        throw Error("folded polynomial identity failed at p = " + std::to_string(p));
    return out;
}

std::string render_text(const BoundExpression& expr) {
    std::ostringstream os;
    os << (expr.model == ModelKind::Minimal ? "ω²_min" : "ω²_reg") << " ≤ "
       << expr.genus_factor.str() << "·( ";
    if (!expr.disc_coeff.is_zero())
        os << expr.disc_coeff.str() << "·log|Δ| + ";
    os << expr.degree << "·(κ1·log " << expr.b_max << " + κ2) + " << expr.logp_coeff.str()
       << "·log " << expr.p << " )";
    return os.str();
}

std::string render_json(const BoundExpression& expr) {
    nlohmann::ordered_json j;
    j["p"] = expr.p;
    j["model"] = expr.model == ModelKind::Minimal ? "minimal" : "regular";
    j["genus_factor"] = expr.genus_factor.str();
    j["disc_coeff"] = expr.disc_coeff.str();
    j["degree"] = expr.degree;
    j["b_max"] = expr.b_max;
    j["logp_coeff"] = expr.logp_coeff.str();
    j["folded"] = expr.folded;
    return j.dump();
}

BoundExpression parse_bound_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed bound expression: ") + e.what());
    }
    BoundExpression expr;
    try {
        expr.p = j.at("p").get<long>();
        const std::string model = j.at("model").get<std::string>();
        if (model == "minimal")
            expr.model = ModelKind::Minimal;
        else if (model == "regular")
            expr.model = ModelKind::Regular;
        else
            throw Error("unknown model kind: " + model);
        expr.genus_factor = Rational::from_string(j.at("genus_factor").get<std::string>());
        expr.disc_coeff = Rational::from_string(j.at("disc_coeff").get<std::string>());
        expr.degree = j.at("degree").get<long>();
        expr.b_max = j.at("b_max").get<long>();
        expr.logp_coeff = Rational::from_string(j.at("logp_coeff").get<std::string>());
        expr.folded = j.at("folded").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed bound expression: ") + e.what());
    }
    return expr;
}

} // namespace fermatlat
