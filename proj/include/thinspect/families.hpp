#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <string>

#include "thinspect/tree.hpp"

namespace thinspect {

enum class family {
    path,
    star,
    spider,
    caterpillar,
    long_haired_caterpillar,
    t0,
    t1,
    t2,
    t3,
    t4,
    t5,
    ta,
    prufer,
};

/// Parametric description of a named tree.
///
/// Parameter semantics:
///   path: {n}                          star: {n} (the star K_{1,n-1})
///   spider: {legs, leg_length}
///   caterpillar: one entry per spine vertex = number of pendant leaves
///   long_haired_caterpillar: one entry per spine vertex = hair length (0 = none)
///   t2: {i,j,k} (i,j,k >= 2)           t3: {i,j} (>= 2)
///   t4: {i} (>= 2)                     t5: {i,j} (>= 1)
///   prufer: the Prufer sequence (tree on params.size()+2 vertices)
/// For t2..t5 the parameters are the distances from the central vertex to the
/// corresponding branch vertices.
struct FamilySpec {
    family fam;
    std::vector<int> params;
};

inline const char* family_name(family f) {
    switch (f) {
        case family::path: return "path";
        case family::star: return "star";
        case family::spider: return "spider";
        case family::caterpillar: return "caterpillar";
        case family::long_haired_caterpillar: return "longhair";
        case family::t0: return "T0";
        case family::t1: return "T1";
        case family::t2: return "T2";
        case family::t3: return "T3";
        case family::t4: return "T4";
        case family::t5: return "T5";
        case family::ta: return "TA";
        case family::prufer: return "prufer";
    }
    return "?";
}

namespace detail {

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw tree_error(msg);
}

// appends a path of `len` edges starting at `from`; returns the far endpoint
inline vertex grow_arm(std::vector<std::pair<vertex, vertex>>& edges, vertex from, int len,
                       int& next_id) {
    vertex prev = from;
    for (int s = 0; s < len; s++) {
        edges.emplace_back(prev, next_id);
        prev = next_id++;
    }
    return prev;
}

inline void grow_leaves(std::vector<std::pair<vertex, vertex>>& edges, vertex at, int count,
                        int& next_id) {
    for (int s = 0; s < count; s++) edges.emplace_back(at, next_id++);
}

}  // namespace detail

/// Standard Prufer decoding; the sequence has length n-2 over {0..n-1}.
inline Tree prufer_decode(int n, const std::vector<int>& seq) {
    detail::require(n >= 1, "n must be >= 1");
    if (n == 1) return tree_from_edges(1, {});
    if (n == 2) return tree_from_edges(2, {{0, 1}});
    detail::require(static_cast<int>(seq.size()) == n - 2, "prufer sequence must have length n-2");
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int s : seq) {
        detail::require(s >= 0 && s < n, "prufer symbol out of range");
        deg[static_cast<size_t>(s)]++;
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; v++)
        if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
    std::vector<std::pair<vertex, vertex>> edges;
    for (int s : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, s);
        if (--deg[static_cast<size_t>(s)] == 1) leaves.push(s);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(u, v);
    return tree_from_edges(n, std::move(edges));
}

/// Prufer encoding (inverse of prufer_decode) for n >= 3.
inline std::vector<int> prufer_encode(const Tree& t) {
    detail::require(t.n >= 3, "prufer encoding needs n >= 3");
    std::vector<int> deg(static_cast<size_t>(t.n));
    for (vertex v = 0; v < t.n; v++) deg[static_cast<size_t>(v)] = t.degree(v);
    std::vector<char> gone(static_cast<size_t>(t.n), 0);
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (vertex v = 0; v < t.n; v++)
        if (deg[static_cast<size_t>(v)] == 1) leaves.push(v);
    std::vector<int> seq;
    for (int step = 0; step < t.n - 2; step++) {
        int leaf = leaves.top();
        leaves.pop();
        gone[static_cast<size_t>(leaf)] = 1;
        vertex parent = -1;
        for (vertex w : t.neighbors(leaf))
            if (!gone[static_cast<size_t>(w)]) parent = w;
        seq.push_back(parent);
        if (--deg[static_cast<size_t>(parent)] == 1) leaves.push(parent);
    }
    return seq;
}

/// Builds the named tree with canonical labels (center = 0, arms in order).
inline Tree build_family(const FamilySpec& spec) {
    using detail::grow_arm;
    using detail::grow_leaves;
    using detail::require;
    const auto& p = spec.params;
    std::vector<std::pair<vertex, vertex>> edges;
    int id = 1;
    switch (spec.fam) {
        case family::path: {
            require(p.size() == 1 && p[0] >= 1, "path requires n >= 1");
            for (int i = 0; i + 1 < p[0]; i++) edges.emplace_back(i, i + 1);
            return tree_from_edges(p[0], std::move(edges));
        }
        case family::star: {
            require(p.size() == 1 && p[0] >= 1, "star requires n >= 1");
            grow_leaves(edges, 0, p[0] - 1, id);
            return tree_from_edges(p[0], std::move(edges));
        }
        case family::spider: {
            require(p.size() == 2 && p[0] >= 0 && p[1] >= 1, "spider requires legs >= 0, length >= 1");
            for (int leg = 0; leg < p[0]; leg++) grow_arm(edges, 0, p[1], id);
            return tree_from_edges(id, std::move(edges));
        }
        case family::caterpillar: {
            require(!p.empty(), "caterpillar requires at least one spine vertex");
            int spine = static_cast<int>(p.size());
            id = spine;
            for (int i = 0; i + 1 < spine; i++) edges.emplace_back(i, i + 1);
            for (int i = 0; i < spine; i++) {
                require(p[static_cast<size_t>(i)] >= 0, "leaf count must be >= 0");
                grow_leaves(edges, i, p[static_cast<size_t>(i)], id);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::long_haired_caterpillar: {
            require(!p.empty(), "long-haired caterpillar requires at least one spine vertex");
            int spine = static_cast<int>(p.size());
            id = spine;
            for (int i = 0; i + 1 < spine; i++) edges.emplace_back(i, i + 1);
            for (int i = 0; i < spine; i++) {
                require(p[static_cast<size_t>(i)] >= 0, "hair length must be >= 0");
                grow_arm(edges, i, p[static_cast<size_t>(i)], id);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::t0:
            return build_family({family::spider, {5, 2}});
        case family::t1: {
            require(p.empty(), "t1 takes no parameters");
            for (int b = 0; b < 3; b++) {
                vertex bv = id++;
                edges.emplace_back(0, bv);
                grow_leaves(edges, bv, 3, id);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::t2: {
            require(p.size() == 3 && p[0] >= 2 && p[1] >= 2 && p[2] >= 2, "t2 requires i,j,k >= 2");
            for (int a = 0; a < 3; a++) {
                vertex bv = grow_arm(edges, 0, p[static_cast<size_t>(a)], id);
                grow_leaves(edges, bv, 2, id);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::t3: {
            require(p.size() == 2 && p[0] >= 2 && p[1] >= 2, "t3 requires i,j >= 2");
            vertex near = id++;
            edges.emplace_back(0, near);
            grow_leaves(edges, near, 3, id);
            for (int a = 0; a < 2; a++) {
                vertex bv = grow_arm(edges, 0, p[static_cast<size_t>(a)], id);
                grow_leaves(edges, bv, 2, id);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::t4: {
            require(p.size() == 1 && p[0] >= 2, "t4 requires i >= 2");
            for (int b = 0; b < 2; b++) {
                vertex bv = id++;
                edges.emplace_back(0, bv);
                grow_leaves(edges, bv, 3, id);
            }
            vertex bv = grow_arm(edges, 0, p[0], id);
            grow_leaves(edges, bv, 2, id);
            return tree_from_edges(id, std::move(edges));
        }
        case family::t5: {
            require(p.size() == 2 && p[0] >= 1 && p[1] >= 1, "t5 requires i,j >= 1");
            edges.emplace_back(0, id++);  // pendant leaf
            vertex near = id++;
            edges.emplace_back(0, near);
            grow_leaves(edges, near, 2, id);
            for (int a = 0; a < 2; a++) {
                vertex bv = grow_arm(edges, 0, p[static_cast<size_t>(a)], id);
                grow_leaves(edges, bv, 2, id);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::ta: {
            require(p.empty(), "ta takes no parameters");
            // three spiders with 5 legs of length 2; vertex 0 is adjacent to the
            // end of the first leg of each copy
            for (int c = 0; c < 3; c++) {
                vertex center = id++;
                for (int leg = 0; leg < 5; leg++) {
                    edges.emplace_back(center, id);
                    edges.emplace_back(id, id + 1);
                    id += 2;
                }
                edges.emplace_back(0, center + 2);
            }
            return tree_from_edges(id, std::move(edges));
        }
        case family::prufer: {
            int n = static_cast<int>(p.size()) + 2;
            return prufer_decode(n, p);
        }
    }
    throw tree_error("unknown family");
}

/// Uniform labeled tree via Prufer decoding; deterministic for fixed seed.
inline Tree random_tree(int n, uint64_t seed) {
    detail::require(n >= 1, "n must be >= 1");
    if (n <= 2) return prufer_decode(n, {});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (auto& s : seq) s = pick(rng);
    return prufer_decode(n, seq);
}

/// Visits every labeled tree on n vertices (Prufer enumeration), 1 <= n <= 9.
/// The visitor may return false to stop early; returns the number visited.
inline uint64_t for_each_labeled_tree(int n, const std::function<bool(const Tree&)>& visit) {
    detail::require(n >= 1 && n <= 9, "exhaustive enumeration supports 1 <= n <= 9");
    if (n <= 2) {
        visit(prufer_decode(n, {}));
        return 1;
    }
    std::vector<int> seq(static_cast<size_t>(n - 2), 0);
    uint64_t count = 0;
    while (true) {
        count++;
        if (!visit(prufer_decode(n, seq))) return count;
        int i = n - 3;
        while (i >= 0 && seq[static_cast<size_t>(i)] == n - 1) seq[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        seq[static_cast<size_t>(i)]++;
    }
    return count;
}

/// Random caterpillar with exactly n vertices.
inline Tree random_caterpillar(int n, uint64_t seed) {
    detail::require(n >= 1, "n must be >= 1");
    std::mt19937_64 rng(seed);
    if (n <= 2) return prufer_decode(n, {});
    std::uniform_int_distribution<int> spine_pick(1, n);
    int spine = spine_pick(rng);
    std::vector<int> leaves(static_cast<size_t>(spine), 0);
    for (int extra = 0; extra < n - spine; extra++)
        leaves[static_cast<size_t>(std::uniform_int_distribution<int>(0, spine - 1)(rng))]++;
    return build_family({family::caterpillar, leaves});
}

/// Random long-haired caterpillar with n vertices and maximum degree 3
/// (each spine vertex carries at most one hair).
inline Tree random_long_haired_caterpillar(int n, uint64_t seed) {
    detail::require(n >= 1, "n must be >= 1");
    std::mt19937_64 rng(seed);
    if (n <= 2) return prufer_decode(n, {});
    std::uniform_int_distribution<int> spine_pick(1, n);
    int spine = spine_pick(rng);
    std::vector<int> hair(static_cast<size_t>(spine), 0);
    int rest = n - spine;
    while (rest > 0) {
        std::vector<int> empty;
        for (int i = 0; i < spine; i++)
            if (hair[static_cast<size_t>(i)] == 0) empty.push_back(i);
        if (empty.empty()) {
            int at = std::uniform_int_distribution<int>(0, spine - 1)(rng);
            hair[static_cast<size_t>(at)] += rest;  // lengthen an existing hair; degrees unchanged
            rest = 0;
        } else {
            int at = empty[static_cast<size_t>(
                std::uniform_int_distribution<int>(0, static_cast<int>(empty.size()) - 1)(rng))];
            int len = std::uniform_int_distribution<int>(1, rest)(rng);
            hair[static_cast<size_t>(at)] = len;
            rest -= len;
        }
    }
    return build_family({family::long_haired_caterpillar, hair});
}

}  // namespace thinspect
