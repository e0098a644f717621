#include "difflab/descriptor.hpp"

#include <stdexcept>

namespace difflab {

using nlohmann::json;

json to_json(const BVFunc& f) {
    json ac;
    ac["breakpoints"] = f.ac().breakpoints();
    json coeffs = json::array();
    for (const auto& p : f.ac().pieces()) coeffs.push_back(p.coeffs());
    ac["coeffs"] = coeffs;

    json singular = json::array();
    for (const auto& s : f.singular()) {
        singular.push_back({{"base", "cantor"},
                            {"depth", s.depth()},
                            {"a", s.domain_lo()},
                            {"b", s.domain_hi()},
                            {"scale", s.scale()},
                            {"offset", s.offset()}});
    }
    return {{"ac", ac}, {"singular", singular}};
}

BVFunc bvfunc_from_json(const json& j) {
    const json& ac = j.at("ac");
    std::vector<double> breaks = ac.at("breakpoints").get<std::vector<double>>();
    std::vector<Polynomial> pieces;
    for (const auto& c : ac.at("coeffs"))
        pieces.emplace_back(c.get<std::vector<double>>());
    // no re-stitching: the serialized coefficients are authoritative
    PiecewisePolynomial pp(std::move(breaks), std::move(pieces), /*stitch=*/false);

    std::vector<SingularStaircase> stairs;
    for (const auto& s : j.at("singular")) {
        if (s.at("base").get<std::string>() != "cantor")
            throw std::invalid_argument("bvfunc_from_json: unknown staircase base");
        stairs.emplace_back(s.at("depth").get<int>(), s.at("a").get<double>(),
                            s.at("b").get<double>(), s.at("scale").get<double>(),
                            s.at("offset").get<double>());
    }
    return {std::move(pp), std::move(stairs)};
}

json to_json(const Diffeo& d) {
    json j;
    j["manifold"] = d.manifold() == Manifold::Interval ? "interval" : "circle";
    j["k"] = d.order();
    j["rotation_offset"] = d.rotation_offset();
    if (d.is_affine()) {
        j["log_derivative"] = nullptr;
    } else if (const BVFunc* g = d.source_log_derivative()) {
        j["log_derivative"] = to_json(*g);
    } else {
        throw std::invalid_argument("to_json: composite diffeo has no closed descriptor");
    }
    return j;
}

Diffeo diffeo_from_json(const json& j) {
    std::string m = j.at("manifold").get<std::string>();
    Manifold manifold = m == "interval" ? Manifold::Interval : Manifold::Circle;
    int k = j.at("k").get<int>();
    double rho = j.value("rotation_offset", 0.0);
    if (j.at("log_derivative").is_null()) {
        if (manifold == Manifold::Circle) return Diffeo::rotation(rho, k);
        return Diffeo::identity(Manifold::Interval, k);
    }
    BVFunc g = bvfunc_from_json(j.at("log_derivative"));
    return Diffeo::from_log_derivative(g, manifold, rho, k);
}

json to_json(const MetricValue& m) {
    json parts;
    for (const auto& [name, v] : m.summands) parts[name] = v;
    return {{"total", m.total}, {"summands", parts}};
}

}  // namespace difflab
