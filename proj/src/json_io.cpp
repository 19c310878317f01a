#include "jetwronsk/json_io.hpp"

#include <stdexcept>

#include "jetwronsk/parser.hpp"

namespace jetwronsk {

json jet_point_to_json(const JetPoint& w) {
    json out = json::object();
    const auto& names = w.context.universe();
    for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = w.values[i].str();
    return out;
}

JetPoint jet_point_from_json(const JetContext& ctx, const json& j) {
    if (!j.is_object()) throw std::invalid_argument("jet point JSON must be an object");
    JetPoint w = JetPoint::zero(ctx);
    const auto& names = ctx.universe();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!j.contains(names[i]))
            throw std::invalid_argument("jet point JSON misses coordinate " + names[i]);
        w.values[i] = Rational::parse(j.at(names[i]).get<std::string>());
    }
    return w;
}

json plucker_to_json(const PluckerVector& v) {
    json out = json::object();
    for (const auto& [tuple, coord] : v.coords) {
        std::string key = "(";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) key += ",";
            key += multi_index_str(v.ambient[tuple[i]]);
        }
        key += ")";
        out[key] = coord.str();
    }
    return out;
}

FamilySpec family_from_json(const json& j) {
    FamilySpec spec;
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    spec.context = JetContext(n, k);
    spec.N = j.at("N").get<int>();
    spec.delta = j.at("delta").get<int>();
    spec.r = j.at("r").get<int>();
    if (j.contains("epsilon")) spec.epsilon = j.at("epsilon").get<int>();
    const std::vector<std::string> base = spec.context.base_vars();
    for (const auto& expr : j.at("tau"))
        spec.tau.push_back(parse_polynomial(expr.get<std::string>(), base));
    if (j.contains("a"))
        for (const auto& [key, expr] : j.at("a").items())
            spec.a[parse_multi_index(key, spec.N + 1)] =
                parse_polynomial(expr.get<std::string>(), base);
    spec.validate();
    return spec;
}

json family_to_json(const FamilySpec& spec) {
    json out;
    out["n"] = spec.context.n;
    out["N"] = spec.N;
    out["k"] = spec.context.k;
    out["delta"] = spec.delta;
    out["r"] = spec.r;
    json tau = json::array();
    for (const auto& t : spec.tau) tau.push_back(t.str());
    out["tau"] = tau;
    json a = json::object();
    for (const auto& [I, aI] : spec.a) a[multi_index_str(I)] = aI.str();
    out["a"] = a;
    return out;
}

json curve_to_json(const CurveGerm& germ) {
    json comps = json::array();
    for (const auto& c : germ.components) {
        json coeffs = json::array();
        for (const auto& q : c.coeffs()) coeffs.push_back(q.str());
        comps.push_back(coeffs);
    }
    return json{{"order", germ.order()}, {"components", comps}};
}

json suite_result_to_json(const SuiteResult& res) {
    json checks = json::object();
    for (const auto& c : res.checks) {
        json entry;
        entry["pass"] = c.pass;
        if (!c.pass) entry["witness"] = c.witness;
        checks[c.name] = entry;
    }
    return json{{"suite", res.suite},
                {"seed", res.seed},
                {"trials", res.trials},
                {"checks", checks},
                {"all_pass", res.all_pass()}};
}

}  // namespace jetwronsk
