#pragma once

#include <array>

#include "thinspect/recognition.hpp"

namespace thinspect {

/// The joined-spiders counterexample tree (34 vertices; build_family ta).
inline Tree ta_tree() { return build_family({family::ta, {}}); }

/// Known-good strongly consistent 3-class representation of ta_tree(),
/// transcribed into the canonical labeling. Verified by the test suite and
/// by ta_battery before use.
inline Representation ta_reference_representation() {
    Representation rep;
    rep.ordering = {11, 9, 5, 10, 8, 4, 1, 2, 6, 3, 7, 31, 29, 30, 28, 24, 0,
                    23, 25, 14, 26, 32, 27, 33, 20, 19, 13, 12, 15, 21, 17, 16, 22, 18};
    rep.classes = {0, 1, 0, 0, 2, 2, 1, 1, 0, 0, 1, 1, 1, 2, 2, 2, 2,
                   1, 1, 1, 1, 0, 0, 1, 2, 2, 0, 0, 2, 2, 1, 1, 1, 1};
    rep.k = 3;
    return rep;
}

struct AuditCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
    }
};

inline const std::vector<std::pair<family, std::vector<int>>>& minimal_family_parameters() {
    static const std::vector<std::pair<family, std::vector<int>>> tbl = {
        {family::t0, {}},      {family::t1, {}},     {family::t2, {2, 2, 2}},
        {family::t3, {2, 2}},  {family::t4, {2}},    {family::t5, {1, 1}},
    };
    return tbl;
}

/// Verifies that the family instance is forbidden while every single-leaf
/// deletion drops back to proper thinness at most 2 with a verifier-passing
/// certificate. Leaf deletion suffices because every proper connected
/// induced subtree sits inside some single-leaf deletion and proper thinness
/// is monotone under induced subtrees.
inline AuditReport minimality_audit(const FamilySpec& spec) {
    bool minimal = false;
    for (const auto& [f, p] : minimal_family_parameters())
        minimal = minimal || (f == spec.fam && p == spec.params);
    if (!minimal) throw tree_error("minimality_audit requires a family at its minimal parameters");

    AuditReport report;
    Tree inst = build_family(spec);
    std::string base = family_name(spec.fam);

    Classification cls = classify(inst);
    report.add(base + " classifies as pthin >= 3", cls.v == verdict::at_least_3);
    if (cls.witness) {
        report.add(base + " witness names the instance's own family",
                   cls.witness->spec.fam == spec.fam && cls.witness->spec.params == spec.params);
    }

    for (vertex leaf : leaves_of(inst)) {
        Tree sub = remove_leaf(inst, leaf);
        Classification c = classify(sub);
        std::string tag = base + " - leaf " + std::to_string(leaf);
        bool positive = c.v == verdict::pthin1 || c.v == verdict::pthin2;
        bool verified = positive && !check_representation(sub, c.rep, true);
        report.add(tag + " has pthin <= 2 with verified certificate", positive && verified);
        report.add(tag + " contains no forbidden family", !detect(sub).has_value());
    }
    return report;
}

namespace detail {

// vertex sets of the three spider copies in the canonical ta labeling
inline std::array<std::vector<vertex>, 3> ta_copies() {
    std::array<std::vector<vertex>, 3> out;
    for (int c = 0; c < 3; c++)
        for (int i = 0; i < 11; i++) out[static_cast<size_t>(c)].push_back(1 + 11 * c + i);
    return out;
}

inline int component_count(const Tree& t, const std::vector<vertex>& verts) {
    std::set<vertex> in(verts.begin(), verts.end());
    std::set<vertex> seen;
    int comps = 0;
    for (vertex s : verts) {
        if (seen.count(s)) continue;
        comps++;
        std::vector<vertex> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            vertex x = stack.back();
            stack.pop_back();
            for (vertex y : t.neighbors(x))
                if (in.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
    }
    return comps;
}

}  // namespace detail

/// Battery of checks around the counterexample tree:
///   (a) the reference 3-class representation is strongly consistent;
///   (b) the T0 pattern is detected inside it;
///   (c) removing any simple path leaves a component containing T0;
///   (d) every spider copy meets all three classes of the reference
///       representation;
///   (e) every class of the reference representation induces a disconnected
///       subgraph.
inline AuditReport ta_battery() {
    AuditReport report;
    Tree t = ta_tree();
    Representation rep = ta_reference_representation();

    auto viol = check_representation(t, rep, true);
    report.add("reference representation is strongly consistent with 3 classes",
               !viol && rep.k == 3);

    auto m = detect(t);
    report.add("T0 detected inside the tree", m && m->spec.fam == family::t0);

    uint64_t paths = 0, with_t0 = 0;
    for (vertex u = 0; u < t.n; u++) {
        for (vertex v = u; v < t.n; v++) {
            tree_path p = unique_path(t, u, v);
            paths++;
            bool found = false;
            for (const auto& comp : components_after_removal(t, p)) {
                auto [sub, orig] = induced_tree(t, comp);
                auto t0m = detail::scan_t0(sub);
                if (t0m) {
                    std::vector<vertex> image;
                    for (vertex x : t0m->image) image.push_back(orig[static_cast<size_t>(x)]);
                    found = match_template(t, image, {family::t0, {}}).has_value();
                }
                if (found) break;
            }
            with_t0 += found;
        }
    }
    report.add("every path removal leaves a component containing T0",
               paths == with_t0,
               std::to_string(with_t0) + "/" + std::to_string(paths) + " paths");

    bool copies_ok = true;
    for (const auto& copy : detail::ta_copies()) {
        std::set<int> classes_met;
        for (vertex v : copy) classes_met.insert(rep.classes[static_cast<size_t>(v)]);
        copies_ok = copies_ok && classes_met == std::set<int>{0, 1, 2};
    }
    report.add("each spider copy meets all three classes", copies_ok);

    bool all_disconnected = true;
    for (int c = 0; c < 3; c++) {
        std::vector<vertex> verts;
        for (vertex v = 0; v < t.n; v++)
            if (rep.classes[static_cast<size_t>(v)] == c) verts.push_back(v);
        all_disconnected = all_disconnected && detail::component_count(t, verts) > 1;
    }
    report.add("each class induces a disconnected subgraph", all_disconnected);

    return report;
}

}  // namespace thinspect
