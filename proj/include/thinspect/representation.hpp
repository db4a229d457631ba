#pragma once

#include <functional>

#include "thinspect/tree.hpp"

namespace thinspect {

/// Vertex ordering plus class partition; the positive certificate.
struct Representation {
    std::vector<vertex> ordering;  // position i holds the i-th vertex
    std::vector<int> classes;      // class id per vertex, 0..k-1
    int k = 0;

    bool dimensions_match(const Tree& t) const {
        return static_cast<int>(ordering.size()) == t.n &&
               static_cast<int>(classes.size()) == t.n;
    }
};

/// Representation with every vertex in one class, ordered along the path.
inline Representation single_class_path_representation(const tree_path& order) {
    Representation rep;
    rep.ordering = order;
    rep.classes.assign(order.size(), 0);
    rep.k = 1;
    return rep;
}

enum class violation_clause { forward, backward };

/// A failed defining implication on a triple of ordering positions.
struct Violation {
    vertex r, s, t;  // vertex ids at increasing ordering positions
    violation_clause clause;
};

namespace detail {

struct adj_matrix {
    int n;
    std::vector<char> m;
    explicit adj_matrix(const Tree& t) : n(t.n), m(static_cast<size_t>(t.n) * t.n, 0) {
        for (auto [u, v] : t.edges) {
            m[static_cast<size_t>(u) * n + v] = 1;
            m[static_cast<size_t>(v) * n + u] = 1;
        }
    }
    bool operator()(vertex u, vertex v) const { return m[static_cast<size_t>(u) * n + v]; }
};

}  // namespace detail

/// Checks (strong) consistency of the pair by unrolling the defining
/// implications over all position triples r < s < t. Returns the
/// lexicographically first violation by position, or nothing when consistent.
inline std::optional<Violation> check_representation(const Tree& t, const Representation& rep,
                                                     bool strong) {
    if (!rep.dimensions_match(t)) throw tree_error("representation dimensions do not match tree");
    {
        std::vector<char> seen(static_cast<size_t>(t.n), 0);
        for (vertex v : rep.ordering) {
            if (!t.valid_vertex(v) || seen[static_cast<size_t>(v)])
                throw tree_error("ordering is not a permutation");
            seen[static_cast<size_t>(v)] = 1;
        }
        for (int c : rep.classes)
            if (c < 0 || c >= rep.k) throw tree_error("class id out of range");
    }
    detail::adj_matrix A(t);
    const auto& ord = rep.ordering;
    for (int i = 0; i < t.n; i++) {
        for (int j = i + 1; j < t.n; j++) {
            for (int l = j + 1; l < t.n; l++) {
                vertex r = ord[static_cast<size_t>(i)];
                vertex s = ord[static_cast<size_t>(j)];
                vertex u = ord[static_cast<size_t>(l)];
                if (rep.classes[static_cast<size_t>(r)] == rep.classes[static_cast<size_t>(s)] &&
                    A(u, r) && !A(u, s))
                    return Violation{r, s, u, violation_clause::forward};
                if (strong &&
                    rep.classes[static_cast<size_t>(s)] == rep.classes[static_cast<size_t>(u)] &&
                    A(u, r) && !A(r, s))
                    return Violation{r, s, u, violation_clause::backward};
            }
        }
    }
    return std::nullopt;
}

/// Pairs of vertices that may not share a class under a fixed ordering.
struct ConflictGraph {
    int n = 0;
    std::vector<std::pair<vertex, vertex>> conflicts;  // u < v, sorted
};

/// Derivation rule: with position(u) < position(v), {u,v} is a conflict iff
/// some w after v is adjacent to u but not to v (forward), or, when strong,
/// some w before u is adjacent to v but not to u (backward).
inline ConflictGraph conflict_graph(const Tree& t, const std::vector<vertex>& ordering,
                                    bool strong) {
    if (static_cast<int>(ordering.size()) != t.n) throw tree_error("invalid permutation");
    {
        std::vector<char> seen(static_cast<size_t>(t.n), 0);
        for (vertex v : ordering) {
            if (!t.valid_vertex(v) || seen[static_cast<size_t>(v)])
                throw tree_error("invalid permutation");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    detail::adj_matrix A(t);
    ConflictGraph g;
    g.n = t.n;
    for (int i = 0; i < t.n; i++) {
        for (int j = i + 1; j < t.n; j++) {
            vertex u = ordering[static_cast<size_t>(i)];
            vertex v = ordering[static_cast<size_t>(j)];
            bool conflict = false;
            for (int l = j + 1; l < t.n && !conflict; l++) {
                vertex w = ordering[static_cast<size_t>(l)];
                conflict = A(w, u) && !A(w, v);
            }
            if (strong) {
                for (int l = 0; l < i && !conflict; l++) {
                    vertex w = ordering[static_cast<size_t>(l)];
                    conflict = A(w, v) && !A(w, u);
                }
            }
            if (conflict) g.conflicts.push_back(std::minmax(u, v));
        }
    }
    std::sort(g.conflicts.begin(), g.conflicts.end());
    return g;
}

namespace detail {

// Non-conflicting pairs, read along the ordering, form a partial order
// (transitive: for u < v < x, a conflict {u,x} forces {u,v} or {v,x}).
// A class partition consistent with the ordering is exactly a chain cover,
// so the minimum class count follows from Dilworth via bipartite matching.
inline Representation chain_cover_min_classes(const Tree& t, const std::vector<vertex>& ordering,
                                              const ConflictGraph& g) {
    int n = g.n;
    std::vector<char> conf(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.conflicts) {
        conf[static_cast<size_t>(u) * n + v] = 1;
        conf[static_cast<size_t>(v) * n + u] = 1;
    }
    std::vector<std::vector<vertex>> succ(static_cast<size_t>(n));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            vertex u = ordering[static_cast<size_t>(i)];
            vertex v = ordering[static_cast<size_t>(j)];
            if (!conf[static_cast<size_t>(u) * n + v]) succ[static_cast<size_t>(u)].push_back(v);
        }
    std::vector<vertex> match_to(static_cast<size_t>(n), -1);  // right vertex -> left vertex
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::function<bool(vertex)> augment = [&](vertex u) {
        for (vertex v : succ[static_cast<size_t>(u)]) {
            if (visited[static_cast<size_t>(v)]) continue;
            visited[static_cast<size_t>(v)] = 1;
            if (match_to[static_cast<size_t>(v)] < 0 || augment(match_to[static_cast<size_t>(v)])) {
                match_to[static_cast<size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n; i++) {
        std::fill(visited.begin(), visited.end(), 0);
        augment(ordering[static_cast<size_t>(i)]);
    }
    std::vector<vertex> next(static_cast<size_t>(n), -1);
    std::vector<char> has_pred(static_cast<size_t>(n), 0);
    for (vertex v = 0; v < n; v++)
        if (match_to[static_cast<size_t>(v)] >= 0) {
            next[static_cast<size_t>(match_to[static_cast<size_t>(v)])] = v;
            has_pred[static_cast<size_t>(v)] = 1;
        }
    Representation rep;
    rep.ordering = ordering;
    rep.classes.assign(static_cast<size_t>(n), -1);
    int cls = 0;
    for (int i = 0; i < n; i++) {  // chain heads numbered in ordering position
        vertex h = ordering[static_cast<size_t>(i)];
        if (has_pred[static_cast<size_t>(h)]) continue;
        for (vertex x = h; x >= 0; x = next[static_cast<size_t>(x)])
            rep.classes[static_cast<size_t>(x)] = cls;
        cls++;
    }
    rep.k = cls;
    (void)t;
    return rep;
}

}  // namespace detail

/// Minimum class partition (strongly) consistent with the fixed ordering.
/// First-fit greedy on the conflict graph is not always minimal for the
/// strong variant (e.g. the 4-vertex path 3-1-0-2 under the ordering
/// 2,3,1,0 needs 3 greedy classes but 2 suffice), so the minimum is taken
/// as a chain cover of the non-conflict order instead.
inline Representation min_classes_for_ordering(const Tree& t, const std::vector<vertex>& ordering,
                                               bool strong) {
    ConflictGraph g = conflict_graph(t, ordering, strong);
    return detail::chain_cover_min_classes(t, ordering, g);
}

/// First-fit greedy coloring of the conflict graph in ordering positions;
/// an upper bound on the minimum (tight in the non-strong sweeps we ran,
/// not tight for the strong variant).
inline Representation greedy_classes_for_ordering(const Tree& t,
                                                  const std::vector<vertex>& ordering,
                                                  bool strong) {
    ConflictGraph g = conflict_graph(t, ordering, strong);
    int n = g.n;
    std::vector<char> conf(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.conflicts) {
        conf[static_cast<size_t>(u) * n + v] = 1;
        conf[static_cast<size_t>(v) * n + u] = 1;
    }
    Representation rep;
    rep.ordering = ordering;
    rep.classes.assign(static_cast<size_t>(n), -1);
    int k = 0;
    for (vertex v : ordering) {
        std::vector<char> used(static_cast<size_t>(n), 0);
        for (vertex u = 0; u < n; u++)
            if (rep.classes[static_cast<size_t>(u)] >= 0 && conf[static_cast<size_t>(u) * n + v])
                used[static_cast<size_t>(rep.classes[static_cast<size_t>(u)])] = 1;
        int c = 0;
        while (used[static_cast<size_t>(c)]) c++;
        rep.classes[static_cast<size_t>(v)] = c;
        k = std::max(k, c + 1);
    }
    rep.k = k;
    return rep;
}

/// Exact minimum class count for the fixed ordering by exhaustive coloring
/// of the conflict graph; independent of the chain-cover route.
inline Representation min_classes_exact(const Tree& t, const std::vector<vertex>& ordering,
                                        bool strong, int cap = 12) {
    if (t.n > cap) throw tree_error("min_classes_exact: n exceeds cap");
    ConflictGraph g = conflict_graph(t, ordering, strong);
    int n = g.n;
    std::vector<char> conf(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.conflicts) {
        conf[static_cast<size_t>(u) * n + v] = 1;
        conf[static_cast<size_t>(v) * n + u] = 1;
    }
    for (int k = 1; k <= n; k++) {
        std::vector<int> color(static_cast<size_t>(n), -1);
        std::function<bool(int, int)> rec = [&](int i, int maxused) {
            if (i == n) return true;
            vertex v = ordering[static_cast<size_t>(i)];
            int limit = std::min(maxused + 1, k - 1);
            for (int c = 0; c <= limit; c++) {
                bool ok = true;
                for (int j = 0; j < i && ok; j++) {
                    vertex u = ordering[static_cast<size_t>(j)];
                    ok = !(conf[static_cast<size_t>(u) * n + v] &&
                           color[static_cast<size_t>(u)] == c);
                }
                if (!ok) continue;
                color[static_cast<size_t>(v)] = c;
                if (rec(i + 1, std::max(maxused, c))) return true;
                color[static_cast<size_t>(v)] = -1;
            }
            return false;
        };
        if (rec(0, -1)) {
            Representation rep;
            rep.ordering = ordering;
            rep.classes = color;
            rep.k = k;
            return rep;
        }
    }
    throw tree_error("unreachable: coloring with n colors always exists");
}

}  // namespace thinspect
