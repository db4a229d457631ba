#pragma once

#include "thinspect/patterns.hpp"
#include "thinspect/representation.hpp"

namespace thinspect {

enum class c0_clause { clause_3a, clause_3b_i, clause_3b_ii };

struct C0Failure {
    c0_clause clause;
    vertex witness;  // the vertex violating the clause
};

/// Degree-level part of the characterization: cond1 holds iff some vertex has
/// degree >= 3; cond2 fails iff some vertex of degree >= 5 has five or more
/// neighbors of degree > 1.
struct ConditionReport {
    bool cond1 = false;
    bool cond2 = true;
    std::optional<vertex> cond2_offender;
    std::optional<tree_path> c0;          // filled by condition_report
    std::optional<C0Failure> c0_failure;  // first candidate's failure when none passes
};

inline ConditionReport degree_condition_report(const Tree& t) {
    ConditionReport rep;
    for (vertex v = 0; v < t.n; v++) {
        if (t.degree(v) >= 3) rep.cond1 = true;
        if (rep.cond2 && t.degree(v) >= 5) {
            int heavy = 0;
            for (vertex w : t.neighbors(v)) heavy += t.degree(w) > 1;
            if (heavy >= 5) {
                rep.cond2 = false;
                rep.cond2_offender = v;
            }
        }
    }
    return rep;
}

/// Clause check for condition 3: (3a) every vertex of degree >= 4 lies on the
/// path; (3b) every degree-3 vertex off the path is adjacent to a path vertex
/// (i) whose degree is at most 3 (ii).
inline std::optional<C0Failure> path_satisfies_c0(const Tree& t, const tree_path& path) {
    std::vector<char> on(static_cast<size_t>(t.n), 0);
    vertex prev = -1;
    for (vertex v : path) {
        if (!t.valid_vertex(v) || on[static_cast<size_t>(v)]) throw tree_error("invalid path");
        if (prev >= 0 && !t.has_edge(prev, v)) throw tree_error("invalid path");
        on[static_cast<size_t>(v)] = 1;
        prev = v;
    }
    if (path.empty()) throw tree_error("invalid path");
    for (vertex v = 0; v < t.n; v++)
        if (t.degree(v) >= 4 && !on[static_cast<size_t>(v)])
            return C0Failure{c0_clause::clause_3a, v};
    for (vertex v = 0; v < t.n; v++) {
        if (t.degree(v) != 3 || on[static_cast<size_t>(v)]) continue;
        vertex w = -1;
        for (vertex x : t.neighbors(v))
            if (on[static_cast<size_t>(x)]) w = x;
        if (w < 0) return C0Failure{c0_clause::clause_3b_i, v};
        if (t.degree(w) > 3) return C0Failure{c0_clause::clause_3b_ii, v};
    }
    return std::nullopt;
}

/// The ordering construction needs one extra property beyond clauses 3a/3b:
/// a path vertex of degree >= 5 may keep at most two off-path neighbors of
/// degree > 1 (its ordered other-class neighbors must be leaves in the
/// middle). A clause-satisfying path without this property can fail to admit
/// any strongly consistent two-class partition, but a satisfying leaf-to-leaf
/// path with it always exists when any satisfying path does: replacing a
/// one-vertex path end with a longer off-path branch preserves the clauses.
inline bool construction_feasible(const Tree& t, const tree_path& path) {
    std::vector<char> on(static_cast<size_t>(t.n), 0);
    for (vertex v : path) on[static_cast<size_t>(v)] = 1;
    for (vertex v : path) {
        if (t.degree(v) < 5) continue;
        int heavy_off = 0;
        for (vertex w : t.neighbors(v))
            heavy_off += !on[static_cast<size_t>(w)] && t.degree(w) > 1;
        if (heavy_off > 2) return false;
    }
    return true;
}

/// First leaf-to-leaf simple path (leaf pairs in ascending id order) that
/// satisfies condition 3 and the construction feasibility screen, or nothing
/// when no simple path satisfies condition 3.
inline std::optional<tree_path> find_c0(const Tree& t) {
    auto ls = leaves_of(t);
    for (size_t i = 0; i < ls.size(); i++) {
        for (size_t j = i + 1; j < ls.size(); j++) {
            tree_path p = unique_path(t, ls[i], ls[j]);
            if (!path_satisfies_c0(t, p) && construction_feasible(t, p)) return p;
        }
    }
    return std::nullopt;
}

/// Full condition report (degree conditions plus the path search).
inline ConditionReport condition_report(const Tree& t) {
    ConditionReport rep = degree_condition_report(t);
    if (auto c0 = find_c0(t)) {
        rep.c0 = *c0;
    } else {
        auto ls = leaves_of(t);
        if (ls.size() >= 2) rep.c0_failure = path_satisfies_c0(t, unique_path(t, ls[0], ls[1]));
    }
    return rep;
}

namespace detail {

// longest path from `end` into the part of the tree away from `banned`,
// ties broken by the smallest reachable leaf id; may be empty
inline tree_path best_extension(const Tree& t, vertex end, const std::vector<char>& banned) {
    tree_path best;
    tree_path acc;
    std::function<void(vertex, vertex)> dfs = [&](vertex v, vertex parent) {
        bool moved = false;
        for (vertex w : t.neighbors(v)) {
            if (w == parent || banned[static_cast<size_t>(w)]) continue;
            moved = true;
            acc.push_back(w);
            dfs(w, v);
            acc.pop_back();
        }
        if (!moved && (acc.size() > best.size() ||
                       (!acc.empty() && acc.size() == best.size() && acc.back() < best.back())))
            best = acc;
    };
    dfs(end, -1);
    return best;
}

// extends a path to a leaf-to-leaf path, taking the extension with the most
// vertices, ties by smallest endpoint ids
inline tree_path extend_to_leaves(const Tree& t, const tree_path& c0) {
    std::vector<char> banned(static_cast<size_t>(t.n), 0);
    for (vertex v : c0) banned[static_cast<size_t>(v)] = 1;
    if (c0.size() == 1) {
        vertex v = c0[0];
        // two longest disjoint downward paths, distinct first edges
        std::vector<tree_path> cands;
        for (vertex w : t.neighbors(v)) {
            std::vector<char> b2 = banned;
            tree_path ext{w};
            b2[static_cast<size_t>(w)] = 1;
            tree_path rest = best_extension(t, w, b2);
            ext.insert(ext.end(), rest.begin(), rest.end());
            cands.push_back(std::move(ext));
        }
        std::sort(cands.begin(), cands.end(), [](const tree_path& a, const tree_path& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a.back() < b.back();
        });
        tree_path out;
        if (!cands.empty()) {
            out.assign(cands[0].rbegin(), cands[0].rend());
        }
        out.push_back(v);
        for (size_t i = 1; i < cands.size(); i++) {
            if (cands[i][0] != cands[0][0]) {
                out.insert(out.end(), cands[i].begin(), cands[i].end());
                break;
            }
        }
        return out;
    }
    tree_path front_ext = best_extension(t, c0.front(), banned);
    tree_path back_ext = best_extension(t, c0.back(), banned);
    tree_path out(front_ext.rbegin(), front_ext.rend());
    out.insert(out.end(), c0.begin(), c0.end());
    out.insert(out.end(), back_ext.begin(), back_ext.end());
    return out;
}

// the off-path branch starting at `start` (walking away from `from`); the
// clause checks guarantee it never forks
inline tree_path walk_branch(const Tree& t, vertex start, vertex from,
                             const std::vector<char>& on_path) {
    tree_path out{start};
    vertex prev = from, cur = start;
    while (true) {
        vertex nxt = -1;
        for (vertex w : t.neighbors(cur)) {
            if (w == prev || on_path[static_cast<size_t>(w)]) continue;
            if (nxt >= 0) throw tree_error("internal: off-path branch forks");
            nxt = w;
        }
        if (nxt < 0) return out;
        prev = cur;
        cur = nxt;
        out.push_back(cur);
    }
}

}  // namespace detail

/// Constructs a strongly consistent representation with class 0 the extended
/// path, following the constructive case split on the degree of each path
/// vertex (nothing for degree 2; one branch, possibly split around the path
/// vertex, for degree 3; one branch on each side for degree 4; branches plus
/// pendant leaves for degree >= 5). The output is verified before returning.
inline Representation build_representation(const Tree& t, const tree_path& c0,
                                           tree_path* extended_out = nullptr) {
    if (auto fail = path_satisfies_c0(t, c0); fail)
        throw tree_error("build_representation: path violates condition 3");
    tree_path p = detail::extend_to_leaves(t, c0);
    if (!construction_feasible(t, p))
        throw tree_error("build_representation: extended path admits no two-class partition");
    if (extended_out) *extended_out = p;
    std::vector<char> on(static_cast<size_t>(t.n), 0);
    for (vertex v : p) on[static_cast<size_t>(v)] = 1;

    if (static_cast<int>(p.size()) == t.n) return single_class_path_representation(p);

    std::vector<vertex> order(p.begin(), p.end());
    auto insert_at = [&](size_t pos, const tree_path& chunk) {
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos), chunk.begin(), chunk.end());
    };
    for (size_t pi = 1; pi + 1 < p.size(); pi++) {
        vertex v = p[pi];
        int d = t.degree(v);
        if (d == 2) continue;
        std::vector<vertex> off;
        for (vertex w : t.neighbors(v))
            if (!on[static_cast<size_t>(w)]) off.push_back(w);
        size_t at = static_cast<size_t>(
            std::find(order.begin(), order.end(), v) - order.begin());
        if (d == 3) {
            vertex w0 = off[0];
            if (t.degree(w0) == 3) {
                std::vector<vertex> subs;
                for (vertex w : t.neighbors(w0))
                    if (w != v) subs.push_back(w);
                tree_path left = detail::walk_branch(t, subs[0], w0, on);
                tree_path right = detail::walk_branch(t, subs[1], w0, on);
                right.insert(right.begin(), w0);
                std::reverse(left.begin(), left.end());
                insert_at(at, left);
                at += left.size();
                insert_at(at + 1, right);
            } else if (t.degree(w0) > 3) {
                throw tree_error("internal: off-path vertex of degree > 3 next to the path");
            } else {
                insert_at(at + 1, detail::walk_branch(t, w0, v, on));
            }
        } else if (d == 4) {
            tree_path left = detail::walk_branch(t, off[0], v, on);
            tree_path right = detail::walk_branch(t, off[1], v, on);
            std::reverse(left.begin(), left.end());
            insert_at(at, left);
            at += left.size();
            insert_at(at + 1, right);
        } else {
            std::vector<vertex> longs, xs;
            for (vertex w : off)
                (t.degree(w) > 1 ? longs : xs).push_back(w);
            if (longs.size() > 2)
                throw tree_error("internal: infeasible degree-5 path vertex survived the screen");
            tree_path left, right;
            if (longs.size() == 2) {
                left = detail::walk_branch(t, longs[0], v, on);
                right = detail::walk_branch(t, longs[1], v, on);
            } else if (longs.size() == 1) {
                right = detail::walk_branch(t, longs[0], v, on);
            }
            std::reverse(left.begin(), left.end());
            insert_at(at, left);
            at += left.size();
            tree_path after = xs;
            after.insert(after.end(), right.begin(), right.end());
            insert_at(at + 1, after);
        }
    }

    Representation rep;
    rep.ordering = order;
    rep.classes.assign(static_cast<size_t>(t.n), 1);
    for (vertex v : p) rep.classes[static_cast<size_t>(v)] = 0;
    rep.k = 2;
    if (auto viol = check_representation(t, rep, true); viol)
        throw tree_error("internal: constructed representation fails verification");
    return rep;
}

using Witness = TemplateMatch;

enum class verdict { pthin1, pthin2, at_least_3 };

/// Recognition outcome with its certificate: a representation for the
/// positive verdicts, a forbidden-family witness otherwise.
struct Classification {
    verdict v;
    Representation rep;            // pthin1 / pthin2
    tree_path c0;                  // pthin2: the extended path (= class 0)
    std::optional<Witness> witness;  // at_least_3
};

/// Forbidden-family witness for a tree whose conditions fail. The degree
/// scan covers the T0 case; otherwise the obstruction-triple scan applies.
inline Witness extract_witness(const Tree& t) {
    if (is_path_graph(t)) throw tree_error("extract_witness: tree is a path");
    auto cand = detail::scan_forbidden(t);
    if (!cand) throw tree_error("extract_witness: tree classifies as proper 2-thin");
    auto m = match_template(t, cand->image, cand->spec);
    if (!m) throw tree_error("internal: scanned witness failed template matching");
    return *m;
}

/// Decides proper thinness in {1, 2, >=3}, with a verifier-checked
/// certificate in the positive cases and a template-checked witness in the
/// negative case.
inline Classification classify(const Tree& t) {
    Classification out;
    if (is_path_graph(t)) {
        out.v = verdict::pthin1;
        tree_path p;
        if (t.n == 1) {
            p = {0};
        } else {
            auto ls = leaves_of(t);
            p = unique_path(t, ls[0], ls[1]);
        }
        out.rep = single_class_path_representation(p);
        return out;
    }
    ConditionReport cond = degree_condition_report(t);
    if (!cond.cond2) {
        out.v = verdict::at_least_3;
        out.witness = extract_witness(t);
        return out;
    }
    if (auto c0 = find_c0(t)) {
        out.v = verdict::pthin2;
        out.rep = build_representation(t, *c0, &out.c0);
        return out;
    }
    out.v = verdict::at_least_3;
    out.witness = extract_witness(t);
    return out;
}

}  // namespace thinspect
