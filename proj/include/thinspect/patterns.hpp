#pragma once

#include <array>
#include <map>
#include <tuple>

#include "thinspect/families.hpp"
#include "thinspect/tree.hpp"

namespace thinspect {

/// An injective map from the vertices of build_family(spec) into a host tree
/// whose image induces exactly that tree. mapping[i] is the host vertex for
/// template vertex i.
struct TemplateMatch {
    FamilySpec spec;
    std::vector<vertex> mapping;
};

namespace detail {

// centers of a tree by leaf peeling (one or two)
inline std::vector<vertex> tree_centers(const Tree& t) {
    if (t.n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(t.n));
    std::vector<vertex> layer;
    for (vertex v = 0; v < t.n; v++) {
        deg[static_cast<size_t>(v)] = t.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<vertex> next;
        remaining -= static_cast<int>(layer.size());
        for (vertex v : layer)
            for (vertex w : t.neighbors(v))
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// canonical code of the subtree rooted at v (parent excluded)
inline std::string rooted_code(const Tree& t, vertex v, vertex parent) {
    std::vector<std::string> child_codes;
    for (vertex w : t.neighbors(v))
        if (w != parent) child_codes.push_back(rooted_code(t, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (auto& c : child_codes) code += c;
    code += ")";
    return code;
}

// maps template subtree at (u, up) onto host subtree at (w, wp); both sides
// have equal codes. Children with equal codes are interchangeable, so within
// a code group assignment goes by ascending vertex id on both sides.
inline void map_rooted(const Tree& tpl, vertex u, vertex up, const Tree& host, vertex w, vertex wp,
                       std::vector<vertex>& mapping) {
    mapping[static_cast<size_t>(u)] = w;
    std::map<std::string, std::vector<vertex>> tgroups, hgroups;
    for (vertex c : tpl.neighbors(u))
        if (c != up) tgroups[rooted_code(tpl, c, u)].push_back(c);
    for (vertex c : host.neighbors(w))
        if (c != wp) hgroups[rooted_code(host, c, w)].push_back(c);
    for (auto& [code, tkids] : tgroups) {
        auto& hkids = hgroups[code];
        for (size_t i = 0; i < tkids.size(); i++)
            map_rooted(tpl, tkids[i], u, host, hkids[i], w, mapping);
    }
}

}  // namespace detail

/// Isomorphism with explicit mapping between two trees, or nothing.
inline std::optional<std::vector<vertex>> tree_isomorphism(const Tree& tpl, const Tree& host) {
    if (tpl.n != host.n) return std::nullopt;
    auto tc = detail::tree_centers(tpl);
    auto hc = detail::tree_centers(host);
    if (tc.size() != hc.size()) return std::nullopt;
    for (vertex tr : tc) {
        std::string tcode = detail::rooted_code(tpl, tr, -1);
        for (vertex hr : hc) {
            if (tcode != detail::rooted_code(host, hr, -1)) continue;
            std::vector<vertex> mapping(static_cast<size_t>(tpl.n), -1);
            detail::map_rooted(tpl, tr, -1, host, hr, -1, mapping);
            return mapping;
        }
    }
    return std::nullopt;
}

/// Matches build_family(spec) against the subgraph of t induced by `subset`;
/// returns the vertex mapping when (and only when) they are isomorphic.
inline std::optional<TemplateMatch> match_template(const Tree& t, std::vector<vertex> subset,
                                                   const FamilySpec& spec) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    for (vertex v : subset)
        if (!t.valid_vertex(v)) throw tree_error("match_template: invalid subset vertex");
    Tree tpl = build_family(spec);
    if (static_cast<int>(subset.size()) != tpl.n) return std::nullopt;
    // induced subgraph must be a tree on the subset (forest otherwise)
    Tree sub;
    try {
        sub = induced_tree(t, subset).first;
    } catch (const tree_error&) {
        return std::nullopt;
    }
    auto iso = tree_isomorphism(tpl, sub);
    if (!iso) return std::nullopt;
    TemplateMatch m;
    m.spec = spec;
    m.mapping.resize(static_cast<size_t>(tpl.n));
    for (int i = 0; i < tpl.n; i++)
        m.mapping[static_cast<size_t>(i)] = subset[static_cast<size_t>((*iso)[static_cast<size_t>(i)])];
    return m;
}

/// Direct validity check of a claimed witness mapping: injective, image
/// adjacency matches template edges exactly.
inline bool witness_mapping_valid(const Tree& t, const FamilySpec& spec,
                                  const std::vector<vertex>& mapping) {
    Tree tpl;
    try {
        tpl = build_family(spec);
    } catch (const tree_error&) {
        return false;
    }
    if (static_cast<int>(mapping.size()) != tpl.n) return false;
    std::set<vertex> image;
    for (vertex v : mapping) {
        if (!t.valid_vertex(v)) return false;
        if (!image.insert(v).second) return false;
    }
    for (int a = 0; a < tpl.n; a++)
        for (int b = a + 1; b < tpl.n; b++)
            if (tpl.has_edge(a, b) != t.has_edge(mapping[static_cast<size_t>(a)], mapping[static_cast<size_t>(b)]))
                return false;
    return true;
}

namespace detail {

struct scan_candidate {
    FamilySpec spec;
    std::vector<vertex> image;  // host vertices, sorted

    std::tuple<size_t, int, std::vector<int>, std::vector<vertex>> rank() const {
        int fidx = 0;
        switch (spec.fam) {
            case family::t0: fidx = 0; break;
            case family::t1: fidx = 1; break;
            case family::t2: fidx = 2; break;
            case family::t3: fidx = 3; break;
            case family::t4: fidx = 4; break;
            case family::t5: fidx = 5; break;
            default: fidx = 6; break;
        }
        return {image.size(), fidx, spec.params, image};
    }
};

// the T0 pattern is present iff some vertex has five neighbors of degree > 1
inline std::optional<scan_candidate> scan_t0(const Tree& t) {
    for (vertex v = 0; v < t.n; v++) {
        if (t.degree(v) < 5) continue;
        std::vector<vertex> heavy;
        for (vertex w : t.neighbors(v))
            if (t.degree(w) > 1) heavy.push_back(w);
        if (static_cast<int>(heavy.size()) < 5) continue;
        scan_candidate c;
        c.spec = {family::t0, {}};
        c.image = {v};
        for (int i = 0; i < 5; i++) {
            vertex mid = heavy[static_cast<size_t>(i)];
            c.image.push_back(mid);
            for (vertex w : t.neighbors(mid))
                if (w != v) {
                    c.image.push_back(w);
                    break;
                }
        }
        std::sort(c.image.begin(), c.image.end());
        return c;
    }
    return std::nullopt;
}

// arm of the host path from the nexus to an obstruction vertex (inclusive of
// both), plus the two or three decoration leaves at the far end
inline void add_arm(const Tree& t, vertex nexus, vertex b, int leaf_count,
                    std::vector<vertex>& image) {
    tree_path arm = unique_path(t, nexus, b);
    vertex arm_in = arm[arm.size() - 2];  // neighbor of b along its arm
    for (size_t i = 1; i < arm.size(); i++) image.push_back(arm[i]);
    int added = 0;
    for (vertex w : t.neighbors(b)) {
        if (w == arm_in) continue;
        image.push_back(w);
        if (++added == leaf_count) break;
    }
}

// scans vertex triples of degree >= 3 that admit a nexus; emits the family
// configurations the proof's case split recognizes
inline void scan_triples(const Tree& t, std::vector<scan_candidate>& out) {
    std::vector<vertex> branchy;
    for (vertex v = 0; v < t.n; v++)
        if (t.degree(v) >= 3) branchy.push_back(v);
    size_t m = branchy.size();
    for (size_t a = 0; a < m; a++) {
        for (size_t b = a + 1; b < m; b++) {
            for (size_t c = b + 1; c < m; c++) {
                std::array<vertex, 3> trio{branchy[a], branchy[b], branchy[c]};
                auto nex = nexus_of(t, trio[0], trio[1], trio[2]);
                if (!nex) continue;
                vertex v0 = *nex;
                std::array<int, 3> dist;
                for (int i = 0; i < 3; i++) dist[static_cast<size_t>(i)] = distance(t, v0, trio[static_cast<size_t>(i)]);
                std::vector<int> adj_members, far_members;
                for (int i = 0; i < 3; i++)
                    (dist[static_cast<size_t>(i)] == 1 ? adj_members : far_members).push_back(i);

                // case split on how many obstructions touch the nexus;
                // members adjacent to the nexus need degree >= 4 here
                bool adj_heavy = true;
                for (int i : adj_members) adj_heavy = adj_heavy && t.degree(trio[static_cast<size_t>(i)]) >= 4;
                if (adj_heavy) {
                    scan_candidate cand;
                    cand.image = {v0};
                    std::vector<int> far_d;
                    for (int i : far_members) far_d.push_back(dist[static_cast<size_t>(i)]);
                    std::sort(far_d.begin(), far_d.end());
                    // far members in (distance, id) order so arms follow params
                    std::sort(far_members.begin(), far_members.end(), [&](int x, int y) {
                        return std::pair(dist[static_cast<size_t>(x)], trio[static_cast<size_t>(x)]) <
                               std::pair(dist[static_cast<size_t>(y)], trio[static_cast<size_t>(y)]);
                    });
                    switch (adj_members.size()) {
                        case 3: cand.spec = {family::t1, {}}; break;
                        case 2: cand.spec = {family::t4, far_d}; break;
                        case 1: cand.spec = {family::t3, far_d}; break;
                        case 0: cand.spec = {family::t2, far_d}; break;
                    }
                    for (int i : adj_members) add_arm(t, v0, trio[static_cast<size_t>(i)], 3, cand.image);
                    for (int i : far_members) add_arm(t, v0, trio[static_cast<size_t>(i)], 2, cand.image);
                    std::sort(cand.image.begin(), cand.image.end());
                    out.push_back(std::move(cand));
                }

                // T5: an obstruction adjacent to the nexus and a spare
                // neighbor of the nexus off every arm
                if (!adj_members.empty() && t.degree(v0) >= 4) {
                    std::set<vertex> firsts;
                    for (int i = 0; i < 3; i++) firsts.insert(unique_path(t, v0, trio[static_cast<size_t>(i)])[1]);
                    vertex spare = -1;
                    for (vertex w : t.neighbors(v0))
                        if (!firsts.count(w)) {
                            spare = w;
                            break;
                        }
                    if (spare >= 0) {
                        int u = adj_members[0];
                        scan_candidate cand;
                        std::vector<int> rest;
                        std::vector<int> others;
                        for (int i = 0; i < 3; i++)
                            if (i != u) others.push_back(i);
                        std::sort(others.begin(), others.end(), [&](int x, int y) {
                            return std::pair(dist[static_cast<size_t>(x)], trio[static_cast<size_t>(x)]) <
                                   std::pair(dist[static_cast<size_t>(y)], trio[static_cast<size_t>(y)]);
                        });
                        for (int i : others) rest.push_back(dist[static_cast<size_t>(i)]);
                        cand.spec = {family::t5, rest};
                        cand.image = {v0, spare};
                        add_arm(t, v0, trio[static_cast<size_t>(u)], 2, cand.image);
                        for (int i : others) add_arm(t, v0, trio[static_cast<size_t>(i)], 2, cand.image);
                        std::sort(cand.image.begin(), cand.image.end());
                        out.push_back(std::move(cand));
                    }
                }
            }
        }
    }
}

inline std::optional<scan_candidate> scan_forbidden(const Tree& t) {
    if (auto c = scan_t0(t)) return c;  // smallest family wins outright
    std::vector<scan_candidate> cands;
    scan_triples(t, cands);
    if (cands.empty()) return std::nullopt;
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const scan_candidate& x, const scan_candidate& y) {
                                     return x.rank() < y.rank();
                                 });
    return *best;
}

}  // namespace detail

/// Finds some forbidden-family instance occurring as an induced subtree, or
/// nothing. Runs the obstruction scans directly (no recourse to classify),
/// validating the result through match_template.
inline std::optional<TemplateMatch> detect(const Tree& t) {
    auto cand = detail::scan_forbidden(t);
    if (!cand) return std::nullopt;
    auto m = match_template(t, cand->image, cand->spec);
    if (!m) throw tree_error("internal: scanned witness failed template matching");
    return m;
}

}  // namespace thinspect
