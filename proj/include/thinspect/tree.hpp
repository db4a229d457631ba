#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thinspect {

using vertex = int;
using tree_path = std::vector<vertex>;

struct tree_error : std::runtime_error {
    explicit tree_error(const std::string& what) : std::runtime_error(what) {}
};

enum class parse_error_kind {
    malformed_line,
    self_loop,
    duplicate_edge,
    cyclic,        // also covers edge-count mismatch: both mean "not a tree"
    disconnected,
};

struct parse_error : tree_error {
    parse_error_kind kind;
    int line;  // 1-based line number of the first offending line
    parse_error(parse_error_kind k, int line_, const std::string& what)
        : tree_error("line " + std::to_string(line_) + ": " + what), kind(k), line(line_) {}
};

/// Immutable labeled tree on vertices 0..n-1. Adjacency lists are sorted.
struct Tree {
    int n = 0;
    std::vector<std::pair<vertex, vertex>> edges;  // u < v, sorted lexicographically
    std::vector<std::vector<vertex>> adj;

    int degree(vertex v) const { return static_cast<int>(adj[static_cast<size_t>(v)].size()); }
    const std::vector<vertex>& neighbors(vertex v) const { return adj[static_cast<size_t>(v)]; }

    bool has_edge(vertex u, vertex v) const {
        const auto& a = adj[static_cast<size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool valid_vertex(vertex v) const { return v >= 0 && v < n; }

    bool operator==(const Tree& o) const { return n == o.n && edges == o.edges; }
};

namespace detail {

// union-find used for cycle detection during construction
struct dsu {
    std::vector<int> p;
    explicit dsu(int n) : p(static_cast<size_t>(n)) {
        for (int i = 0; i < n; i++) p[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (p[static_cast<size_t>(x)] != x) {
            p[static_cast<size_t>(x)] = p[static_cast<size_t>(p[static_cast<size_t>(x)])];
            x = p[static_cast<size_t>(x)];
        }
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace detail

/// Builds a tree from an edge list, checking every Tree invariant. Edge i is
/// reported as line line_offset+1+i on failure (the text format starts its
/// edge list on line 2).
inline Tree tree_from_edges(int n, std::vector<std::pair<vertex, vertex>> raw,
                            int line_offset = 0) {
    if (n < 1) throw tree_error("vertex count must be >= 1");
    Tree t;
    t.n = n;
    t.adj.assign(static_cast<size_t>(n), {});
    detail::dsu uf(n);
    std::set<std::pair<vertex, vertex>> seen;
    int line = line_offset;
    for (auto [u, v] : raw) {
        line++;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(parse_error_kind::malformed_line, line, "vertex id out of range");
        if (u == v) throw parse_error(parse_error_kind::self_loop, line, "self-loop");
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw parse_error(parse_error_kind::duplicate_edge, line, "duplicate edge");
        if (!uf.join(u, v))
            throw parse_error(parse_error_kind::cyclic, line, "edge closes a cycle (not a tree)");
        t.adj[static_cast<size_t>(u)].push_back(v);
        t.adj[static_cast<size_t>(v)].push_back(u);
    }
    if (static_cast<int>(raw.size()) != n - 1)
        throw parse_error(parse_error_kind::cyclic, line + 1,
                          "edge count " + std::to_string(raw.size()) + " != n-1 = " +
                              std::to_string(n - 1) + " (not a tree)");
    for (int v = 1; v < n; v++)
        if (uf.find(v) != uf.find(0))
            throw parse_error(parse_error_kind::disconnected, line + 1, "tree is disconnected");
    for (auto& a : t.adj) std::sort(a.begin(), a.end());
    t.edges.assign(seen.begin(), seen.end());
    return t;
}

/// Text format: first line n, then n-1 lines "u v".
inline Tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string first;
    if (!std::getline(in, first))
        throw parse_error(parse_error_kind::malformed_line, 1, "empty input");
    int n = 0;
    {
        std::istringstream fs(first);
        std::string extra;
        if (!(fs >> n) || (fs >> extra) || n < 1)
            throw parse_error(parse_error_kind::malformed_line, 1, "expected vertex count");
    }
    std::vector<std::pair<vertex, vertex>> raw;
    std::string linebuf;
    int lineno = 1;
    while (std::getline(in, linebuf)) {
        lineno++;
        if (linebuf.empty() && in.eof()) break;
        std::istringstream ls(linebuf);
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw parse_error(parse_error_kind::malformed_line, lineno, "expected 'u v'");
        raw.emplace_back(u, v);
    }
    return tree_from_edges(n, std::move(raw), 1);
}

/// Canonical serialization: smaller endpoint first, edges sorted; LF line endings.
inline std::string serialize_tree(const Tree& t) {
    std::ostringstream out;
    out << t.n << "\n";
    for (auto [u, v] : t.edges) out << u << " " << v << "\n";
    return out.str();
}

/// The unique simple path between u and v (inclusive).
inline tree_path unique_path(const Tree& t, vertex u, vertex v) {
    if (!t.valid_vertex(u) || !t.valid_vertex(v)) throw tree_error("invalid vertex id");
    std::vector<vertex> par(static_cast<size_t>(t.n), -1);
    std::vector<char> seen(static_cast<size_t>(t.n), 0);
    seen[static_cast<size_t>(u)] = 1;
    std::vector<vertex> queue{u};
    for (size_t qi = 0; qi < queue.size() && !seen[static_cast<size_t>(v)]; qi++) {
        vertex x = queue[qi];
        for (vertex y : t.neighbors(x)) {
            if (!seen[static_cast<size_t>(y)]) {
                seen[static_cast<size_t>(y)] = 1;
                par[static_cast<size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    tree_path p{v};
    while (p.back() != u) p.push_back(par[static_cast<size_t>(p.back())]);
    std::reverse(p.begin(), p.end());
    return p;
}

inline int distance(const Tree& t, vertex u, vertex v) {
    return static_cast<int>(unique_path(t, u, v).size()) - 1;
}

/// The vertex whose three paths to v1, v2, v3 are pairwise disjoint outside it,
/// or nothing when the three vertices lie on one simple path.
inline std::optional<vertex> nexus_of(const Tree& t, vertex v1, vertex v2, vertex v3) {
    if (!t.valid_vertex(v1) || !t.valid_vertex(v2) || !t.valid_vertex(v3))
        throw tree_error("invalid vertex id");
    if (v1 == v2 || v1 == v3 || v2 == v3) throw tree_error("nexus_of requires distinct vertices");
    // the median of a triple is the single common vertex of the three pairwise paths
    std::vector<int> hits(static_cast<size_t>(t.n), 0);
    for (auto [a, b] : {std::pair{v1, v2}, {v1, v3}, {v2, v3}})
        for (vertex x : unique_path(t, a, b)) hits[static_cast<size_t>(x)]++;
    vertex median = -1;
    for (vertex x = 0; x < t.n; x++)
        if (hits[static_cast<size_t>(x)] == 3) median = x;
    if (median == v1 || median == v2 || median == v3) return std::nullopt;
    return median;
}

inline bool is_path_graph(const Tree& t) {
    for (vertex v = 0; v < t.n; v++)
        if (t.degree(v) > 2) return false;
    return true;
}

/// True iff removing all leaves yields a (possibly empty) path graph.
inline bool is_caterpillar(const Tree& t) {
    if (t.n <= 2) return true;
    std::vector<char> leaf(static_cast<size_t>(t.n), 0);
    for (vertex v = 0; v < t.n; v++) leaf[static_cast<size_t>(v)] = t.degree(v) == 1;
    for (vertex v = 0; v < t.n; v++) {
        if (leaf[static_cast<size_t>(v)]) continue;
        int spine_deg = 0;
        for (vertex w : t.neighbors(v)) spine_deg += !leaf[static_cast<size_t>(w)];
        if (spine_deg > 2) return false;
    }
    return true;
}

inline std::vector<vertex> leaves_of(const Tree& t) {
    std::vector<vertex> out;
    for (vertex v = 0; v < t.n; v++)
        if (t.degree(v) <= 1 && t.n > 1) out.push_back(v);
    if (t.n == 1) out.push_back(0);
    return out;
}

/// Connected components of T - removed, as lists of original vertex ids.
inline std::vector<std::vector<vertex>> components_after_removal(const Tree& t,
                                                                 const std::vector<vertex>& removed) {
    std::vector<char> gone(static_cast<size_t>(t.n), 0);
    for (vertex v : removed) gone[static_cast<size_t>(v)] = 1;
    std::vector<char> seen(static_cast<size_t>(t.n), 0);
    std::vector<std::vector<vertex>> comps;
    for (vertex s = 0; s < t.n; s++) {
        if (gone[static_cast<size_t>(s)] || seen[static_cast<size_t>(s)]) continue;
        std::vector<vertex> comp, stack{s};
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (vertex y : t.neighbors(x))
                if (!gone[static_cast<size_t>(y)] && !seen[static_cast<size_t>(y)]) {
                    seen[static_cast<size_t>(y)] = 1;
                    stack.push_back(y);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Subtree induced by `vertices` (which must be connected in t), relabeled
/// compactly; returns the tree plus the original id of each new vertex.
inline std::pair<Tree, std::vector<vertex>> induced_tree(const Tree& t,
                                                         std::vector<vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    std::vector<int> idx(static_cast<size_t>(t.n), -1);
    for (size_t i = 0; i < vertices.size(); i++) idx[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<vertex, vertex>> es;
    for (auto [u, v] : t.edges)
        if (idx[static_cast<size_t>(u)] >= 0 && idx[static_cast<size_t>(v)] >= 0)
            es.emplace_back(idx[static_cast<size_t>(u)], idx[static_cast<size_t>(v)]);
    return {tree_from_edges(static_cast<int>(vertices.size()), std::move(es)), vertices};
}

/// Tree with a single leaf removed, relabeled compactly.
inline Tree remove_leaf(const Tree& t, vertex leaf) {
    if (t.degree(leaf) != 1) throw tree_error("remove_leaf: vertex is not a leaf");
    std::vector<vertex> keep;
    for (vertex v = 0; v < t.n; v++)
        if (v != leaf) keep.push_back(v);
    return induced_tree(t, keep).first;
}

}  // namespace thinspect
