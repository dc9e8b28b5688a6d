#pragma once

// JSON forms of the domain objects: canonical root-system dumps, weighted
// diagrams, system specs with their solutions, and torus summaries. Key
// order is fixed (ordered_json) so equal inputs serialize byte-identically.

#include "rootwork/grading.hpp"
#include "rootwork/ohmori.hpp"
#include "rootwork/root_system.hpp"
#include "rootwork/torus.hpp"

#include <json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace rootwork {

using Json = nlohmann::ordered_json;

inline Json to_json(const Root& r) { return Json(r.coeffs); }

inline Json roots_json(const std::vector<Root>& roots) {
    Json arr = Json::array();
    for (const Root& r : roots) arr.push_back(r.coeffs);
    return arr;
}

/// {"type": "E8", "rank": 8, "positive_roots": [[...], ...], "cartan": [[...], ...]}
/// with the positive roots in the canonical height-then-lex order.
inline Json root_system_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.type().to_string();
    j["rank"] = rs.rank();
    j["positive_roots"] = roots_json(rs.positive_roots());
    j["cartan"] = rs.cartan().entries;
    return j;
}

/// {"type": "E7", "weights": [1,0,0,1,0,1,0]}
inline Json diagram_json(const WeightedDynkinDiagram& wdd) {
    Json j;
    j["type"] = wdd.rs->type().to_string();
    j["weights"] = wdd.weights;
    return j;
}

/// Subsystem-based diagram: adds the base roots to the plain diagram form.
inline Json diagram_json(const SubsystemDiagram& d) {
    Json j;
    j["type"] = d.rs->type().to_string();
    j["base"] = roots_json(d.base);
    j["weights"] = d.weights;
    return j;
}

inline Json solution_json(const OhmoriSolution& sol) {
    Json j;
    j["status"] = OhmoriSolution::status_name(sol.status);
    if (sol.point) {
        Json n = Json::array();
        for (const BigInt& x : *sol.point) n.push_back(static_cast<long long>(x));
        j["n"] = n;
    }
    if (sol.kernel_rank) j["kernel_rank"] = *sol.kernel_rank;
    return j;
}

struct ParsedSystemSpec {
    std::shared_ptr<const RootSystem> rs;  // keeps the diagram's pointer valid
    WeightedDynkinDiagram wdd;
    OhmoriSystem system;
};

/// System spec:
///   {"type": "E8", "weights": [...], "support": [[...], ...],
///    "support_target": 1, "zero_domain": "levi" | [[...], ...]}
/// "levi" takes the zero domain to be every positive root of weight 0.
inline ParsedSystemSpec parse_system_spec(const Json& j) {
    auto need = [&](const char* key) {
        if (!j.contains(key))
            throw std::invalid_argument(std::string("system spec: missing field \"") + key + "\"");
        return j.at(key);
    };
    ParsedSystemSpec out;
    out.rs = std::make_shared<const RootSystem>(
        RootSystem::build(SimpleType::parse(need("type").get<std::string>())));
    out.wdd = WeightedDynkinDiagram::make(*out.rs, need("weights").get<std::vector<int>>());

    auto parse_roots = [&](const Json& arr) {
        std::vector<Root> roots;
        for (const auto& v : arr) {
            Root r(v.get<std::vector<int>>());
            if (!out.rs->is_root(r))
                throw std::invalid_argument("system spec: " + Json(v).dump() +
                                            " is not a root of " + out.rs->type().to_string());
            roots.push_back(std::move(r));
        }
        return roots;
    };

    std::vector<Root> support = parse_roots(need("support"));
    const long long target = need("support_target").get<long long>();
    std::vector<Root> zero_domain;
    const Json& zd = need("zero_domain");
    if (zd.is_string()) {
        if (zd.get<std::string>() != "levi")
            throw std::invalid_argument("system spec: zero_domain must be \"levi\" or a root list");
        zero_domain = Grading::of(out.wdd).levi_positive();
    } else {
        zero_domain = parse_roots(zd);
    }
    out.system = build_system(out.wdd, support, target, zero_domain);
    return out;
}

/// {"order": 4, "kernel_type": ["D5", "A3"]}
inline Json torus_summary_json(long long ord, const std::vector<SimpleType>& kernel_type) {
    Json j;
    j["order"] = ord;
    Json kt = Json::array();
    for (SimpleType t : kernel_type) kt.push_back(t.to_string());
    j["kernel_type"] = kt;
    return j;
}

}  // namespace rootwork
