#pragma once

#include "thinspect/representation.hpp"

namespace thinspect {

/// Structural properties every strongly consistent representation of a tree
/// must satisfy; used to audit oracle and recognizer outputs. Returns
/// human-readable violation descriptions (empty = all hold).
inline std::vector<std::string> representation_invariant_violations(const Tree& t,
                                                                    const Representation& rep) {
    std::vector<std::string> bad;
    std::vector<int> pos(static_cast<size_t>(t.n));
    for (int i = 0; i < t.n; i++) pos[static_cast<size_t>(rep.ordering[static_cast<size_t>(i)])] = i;

    // at most two same-class neighbors, one on each side
    for (vertex v = 0; v < t.n; v++) {
        int before = 0, after = 0;
        for (vertex w : t.neighbors(v)) {
            if (rep.classes[static_cast<size_t>(w)] != rep.classes[static_cast<size_t>(v)]) continue;
            (pos[static_cast<size_t>(w)] < pos[static_cast<size_t>(v)] ? before : after)++;
        }
        if (before > 1 || after > 1)
            bad.push_back("vertex " + std::to_string(v) + " has " + std::to_string(before + after) +
                          " same-class neighbors (" + std::to_string(before) + " before)");
    }

    if (rep.k == 2) {
        // middle other-class neighbors must be leaves
        for (vertex v = 0; v < t.n; v++) {
            std::vector<vertex> other;
            for (vertex w : t.neighbors(v))
                if (rep.classes[static_cast<size_t>(w)] != rep.classes[static_cast<size_t>(v)])
                    other.push_back(w);
            std::sort(other.begin(), other.end(),
                      [&](vertex a, vertex b) { return pos[static_cast<size_t>(a)] < pos[static_cast<size_t>(b)]; });
            for (size_t i = 1; i + 1 < other.size(); i++)
                if (t.degree(other[i]) != 1)
                    bad.push_back("middle other-class neighbor " + std::to_string(other[i]) +
                                  " of vertex " + std::to_string(v) + " is not a leaf");
        }

        // no double crossing on class-alternating 4-vertex paths
        for (auto [v2, v3] : t.edges) {
            for (int flip = 0; flip < 2; flip++) {
                vertex a = flip ? v3 : v2;
                vertex b = flip ? v2 : v3;
                for (vertex v1 : t.neighbors(a)) {
                    if (v1 == b) continue;
                    for (vertex v4 : t.neighbors(b)) {
                        if (v4 == a || v4 == v1) continue;
                        bool alternating =
                            rep.classes[static_cast<size_t>(v1)] == rep.classes[static_cast<size_t>(b)] &&
                            rep.classes[static_cast<size_t>(a)] == rep.classes[static_cast<size_t>(v4)] &&
                            rep.classes[static_cast<size_t>(v1)] != rep.classes[static_cast<size_t>(a)];
                        if (!alternating) continue;
                        int p1 = pos[static_cast<size_t>(v1)], p2 = pos[static_cast<size_t>(a)];
                        int p3 = pos[static_cast<size_t>(b)], p4 = pos[static_cast<size_t>(v4)];
                        if ((p1 < p3 && p4 < p2) || (p3 < p1 && p2 < p4))
                            bad.push_back("double crossing on path " + std::to_string(v1) + "-" +
                                          std::to_string(a) + "-" + std::to_string(b) + "-" +
                                          std::to_string(v4));
                    }
                }
            }
        }
    }

    // the reversed ordering with the same partition stays strongly consistent
    Representation rev = rep;
    std::reverse(rev.ordering.begin(), rev.ordering.end());
    if (check_representation(t, rev, true))
        bad.push_back("reversed ordering is not strongly consistent");

    return bad;
}

}  // namespace thinspect
