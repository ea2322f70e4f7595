#include "fiber.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>
#include <utility>

namespace fermatlat {

bool is_prime(long n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

FiberConfiguration::FiberConfiguration(long residue_char, std::vector<Component> components,
                                       const std::vector<Edge>& edges)
    : p_(residue_char), components_(std::move(components)) {
    if (!is_prime(p_))
        throw NotPrime(p_);
    const std::size_t n = components_.size();
    if (n == 0)
        throw Error("fiber configuration needs at least one component");
    std::set<std::string> labels;
    for (const auto& c : components_) {
        if (c.multiplicity < 1)
            throw Error("component " + c.label + " has multiplicity < 1");
        if (c.genus < 0)
            throw Error("component " + c.label + " has negative genus");
        if (!labels.insert(c.label).second)
            throw Error("duplicate component label " + c.label);
    }
    matrix_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        matrix_[i * n + i] = components_[i].self_intersection;
    for (const auto& e : edges) {
        if (e.a >= n || e.b >= n)
            throw DimensionMismatch("edge endpoint out of range");
        if (e.a == e.b)
            throw Error("self-intersections belong on the component, not the edge list");
        if (e.count < 0)
            throw Error("negative intersection count between distinct components");
        matrix_[e.a * n + e.b] += e.count;
        matrix_[e.b * n + e.a] += e.count;
    }
    adj_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (matrix_[i * n + j] != 0)
                adj_[i].emplace_back(j, matrix_[i * n + j]);
}

std::vector<Edge> FiberConfiguration::edges() const {
    std::vector<Edge> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (matrix_[i * n + j] != 0)
                out.push_back({i, j, matrix_[i * n + j]});
    return out;
}

long FiberConfiguration::intersection(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size())
        throw DimensionMismatch("component index out of range");
    return matrix_[i * size() + j];
}

std::optional<std::size_t> FiberConfiguration::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].label == label)
            return i;
    return std::nullopt;
}

std::string FiberConfiguration::to_json() const {
    nlohmann::ordered_json j;
    j["p"] = p_;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : components_) {
        nlohmann::ordered_json jc;
        jc["label"] = c.label;
        jc["mult"] = c.multiplicity;
        jc["self"] = c.self_intersection;
        jc["genus"] = c.genus;
        comps.push_back(std::move(jc));
    }
    j["components"] = std::move(comps);
    auto es = nlohmann::ordered_json::array();
    for (const auto& e : edges())
        es.push_back({components_[e.a].label, components_[e.b].label, e.count});
    j["edges"] = std::move(es);
    return j.dump(2);
}

std::string FiberConfiguration::to_dot() const {
    std::ostringstream os;
    os << "graph fiber {\n";
    for (const auto& c : components_)
        os << "  \"" << c.label << "\" [label=\"" << c.label << " (" << c.multiplicity << ","
           << c.self_intersection << ")\"];\n";
    for (const auto& e : edges()) {
        os << "  \"" << components_[e.a].label << "\" -- \"" << components_[e.b].label << "\"";
        if (e.count != 1)
            os << " [label=\"" << e.count << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

VerticalDivisor VerticalDivisor::unit(std::size_t n, std::size_t i) {
    if (i >= n)
        throw DimensionMismatch("unit divisor index out of range");
    VerticalDivisor d = zero(n);
    d.coeffs[i] = Rational(1);
    return d;
}

VerticalDivisor& VerticalDivisor::operator+=(const VerticalDivisor& o) {
    if (o.size() != size())
        throw DimensionMismatch("divisor size mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coeffs[i] += o.coeffs[i];
    return *this;
}

VerticalDivisor& VerticalDivisor::operator-=(const VerticalDivisor& o) {
    if (o.size() != size())
        throw DimensionMismatch("divisor size mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        coeffs[i] -= o.coeffs[i];
    return *this;
}

VerticalDivisor& VerticalDivisor::operator*=(const Rational& t) {
    for (auto& c : coeffs)
        c *= t;
    return *this;
}

HorizontalProfile HorizontalProfile::single(std::size_t n, std::size_t i) {
    if (i >= n)
        throw DimensionMismatch("profile index out of range");
    HorizontalProfile h;
    h.hits.assign(n, 0);
    h.hits[i] = 1;
    return h;
}

Rational pair_vertical(const VerticalDivisor& d1, const VerticalDivisor& d2,
                       const FiberConfiguration& cfg) {
    if (d1.size() != cfg.size() || d2.size() != cfg.size())
        throw DimensionMismatch("divisor not indexed by this configuration");
    Rational acc;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (d1.coeffs[i].is_zero())
            continue;
        Rational row;
        for (const auto& [j, v] : cfg.row(i))
            if (!d2.coeffs[j].is_zero())
                row += Rational(v) * d2.coeffs[j];
        acc += d1.coeffs[i] * row;
    }
    return acc;
}

Rational pair_mixed(const HorizontalProfile& profile, const VerticalDivisor& d,
                    const FiberConfiguration& cfg) {
    if (profile.size() != cfg.size() || d.size() != cfg.size())
        throw DimensionMismatch("profile/divisor not indexed by this configuration");
    Rational acc;
    for (std::size_t i = 0; i < cfg.size(); ++i)
        if (profile.hits[i] != 0 && !d.coeffs[i].is_zero())
            acc += Rational(profile.hits[i]) * d.coeffs[i];
    return acc;
}

VerticalDivisor full_fiber(const FiberConfiguration& cfg) {
    VerticalDivisor d = VerticalDivisor::zero(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i)
        d.coeffs[i] = Rational(cfg.component(i).multiplicity);
    return d;
}

FiberRelationReport check_fiber_relation(const FiberConfiguration& cfg) {
    const VerticalDivisor f = full_fiber(cfg);
    FiberRelationReport report;
    report.defects.resize(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        Rational acc;
        for (const auto& [j, v] : cfg.row(i))
            acc += Rational(v) * f.coeffs[j];
        report.defects[i] = acc;
        if (!acc.is_zero())
            report.nonzero.push_back(i);
    }
    return report;
}

RationalVector adjunction_defects(const FiberConfiguration& cfg, const VerticalDivisor& k_vertical,
                                  const RationalVector& k_horizontal_pairing) {
    if (k_vertical.size() != cfg.size() || k_horizontal_pairing.size() != cfg.size())
        throw DimensionMismatch("canonical data not indexed by this configuration");
    RationalVector out(cfg.size());
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        Rational k_dot_c = k_horizontal_pairing[i];
        for (const auto& [j, v] : cfg.row(i))
            if (!k_vertical.coeffs[j].is_zero())
                k_dot_c += Rational(v) * k_vertical.coeffs[j];
        const Component& c = cfg.component(i);
        out[i] = Rational(2 * c.genus - 2 - c.self_intersection) - k_dot_c;
    }
    return out;
}

Rational adjunction_defect(const FiberConfiguration& cfg, const VerticalDivisor& k_vertical,
                           const RationalVector& k_horizontal_pairing, std::size_t component) {
    if (component >= cfg.size())
        throw DimensionMismatch("component index out of range");
    return adjunction_defects(cfg, k_vertical, k_horizontal_pairing)[component];
}

} // namespace fermatlat
