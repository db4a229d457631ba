#pragma once

#include <nlohmann/json.hpp>

#include "thinspect/recognition.hpp"

namespace thinspect {

using json = nlohmann::json;

inline json representation_to_json(const Representation& rep,
                                   const tree_path* c0 = nullptr) {
    json j;
    j["pthin"] = rep.k;
    j["ordering"] = rep.ordering;
    j["classes"] = rep.classes;
    if (c0) j["c0"] = *c0;
    return j;
}

inline Representation representation_from_json(const json& j, tree_path* c0_out = nullptr) {
    Representation rep;
    rep.k = j.at("pthin").get<int>();
    rep.ordering = j.at("ordering").get<std::vector<vertex>>();
    rep.classes = j.at("classes").get<std::vector<int>>();
    if (c0_out && j.contains("c0")) *c0_out = j.at("c0").get<tree_path>();
    return rep;
}

inline std::optional<FamilySpec> family_from_name(const std::string& name) {
    for (family f : {family::path, family::star, family::spider, family::caterpillar,
                     family::long_haired_caterpillar, family::t0, family::t1, family::t2,
                     family::t3, family::t4, family::t5, family::ta, family::prufer}) {
        std::string fn = family_name(f);
        std::string lower_fn = fn, lower_in = name;
        for (auto& c : lower_fn) c = static_cast<char>(std::tolower(c));
        for (auto& c : lower_in) c = static_cast<char>(std::tolower(c));
        if (lower_fn == lower_in) return FamilySpec{f, {}};
    }
    return std::nullopt;
}

inline json witness_to_json(const Witness& w) {
    json j;
    j["family"] = family_name(w.spec.fam);
    j["params"] = w.spec.params;
    j["vertices"] = w.mapping;
    return j;
}

inline Witness witness_from_json(const json& j) {
    Witness w;
    auto spec = family_from_name(j.at("family").get<std::string>());
    if (!spec) throw tree_error("unknown family in certificate");
    w.spec = *spec;
    w.spec.params = j.at("params").get<std::vector<int>>();
    w.mapping = j.at("vertices").get<std::vector<vertex>>();
    return w;
}

inline json classification_to_json(const Classification& c) {
    json j;
    switch (c.v) {
        case verdict::pthin1:
            j["verdict"] = "pthin1";
            j["certificate"] = representation_to_json(c.rep);
            break;
        case verdict::pthin2:
            j["verdict"] = "pthin2";
            j["certificate"] = representation_to_json(c.rep, &c.c0);
            break;
        case verdict::at_least_3:
            j["verdict"] = "ge3";
            j["certificate"] = witness_to_json(*c.witness);
            break;
    }
    return j;
}

}  // namespace thinspect
