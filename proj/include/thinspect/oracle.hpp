#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>

#include "thinspect/representation.hpp"

namespace thinspect {

struct cap_exceeded : tree_error {
    explicit cap_exceeded(const std::string& what) : tree_error(what) {}
};

/// Size caps for the exhaustive searches. Tunable; THINSPECT_MAX_ORACLE_N
/// overrides every cap when set in the environment.
struct OracleCaps {
    int exact = 12;
    int decide_k1 = 32;
    int decide_k2 = 14;
    int decide_k3 = 11;
    int decide_other = 10;

    int for_k(int k) const {
        if (k <= 1) return decide_k1;
        if (k == 2) return decide_k2;
        if (k == 3) return decide_k3;
        return decide_other;
    }

    static OracleCaps from_env() {
        OracleCaps caps;
        if (const char* s = std::getenv("THINSPECT_MAX_ORACLE_N")) {
            int v = std::atoi(s);
            if (v >= 1) caps = uniform(v);
        }
        return caps;
    }

    static OracleCaps uniform(int v) {
        OracleCaps caps;
        caps.exact = caps.decide_k1 = caps.decide_k2 = caps.decide_k3 = caps.decide_other = v;
        return caps;
    }
};

namespace detail {

// Backtracking search for a strongly consistent ordering under a fixed class
// assignment. Positions are filled left to right, candidate vertices in
// ascending id. Pruning: immediate clause violations against placed pairs,
// plus two forced-future checks (an unplaced vertex that is already bound to
// violate a clause kills the branch). Vertex count is limited to 32 so
// neighborhoods fit in one word.
struct ordering_searcher {
    int n;
    const std::vector<uint32_t>& nbr;
    const std::vector<int>& cls;
    const std::vector<uint32_t>& clsmask;  // vertices per class id
    uint32_t all;
    std::vector<vertex> order;
    uint32_t placed = 0;

    ordering_searcher(int n_, const std::vector<uint32_t>& nbr_, const std::vector<int>& cls_,
                      const std::vector<uint32_t>& clsmask_)
        : n(n_), nbr(nbr_), cls(cls_), clsmask(clsmask_),
          all((n_ == 32) ? ~0u : ((1u << n_) - 1)) {}

    bool admissible(vertex x) {
        const uint32_t xbit = 1u << x;
        const uint32_t nx = nbr[static_cast<size_t>(x)];
        const int cx = cls[static_cast<size_t>(x)];
        const size_t m = order.size();
        for (size_t j = 0; j < m; j++) {
            vertex s = order[j];
            for (size_t i = 0; i < j; i++) {
                vertex r = order[i];
                if (!(nx & (1u << r))) continue;
                if (cls[static_cast<size_t>(r)] == cls[static_cast<size_t>(s)] && !(nx & (1u << s)))
                    return false;
                if (cls[static_cast<size_t>(s)] == cx && !(nbr[static_cast<size_t>(r)] & (1u << s)))
                    return false;
            }
        }
        const uint32_t unplaced = ~(placed | xbit) & all;
        const uint32_t future_same = clsmask[static_cast<size_t>(cx)] & unplaced;
        for (size_t i = 0; i < m; i++) {
            vertex r = order[i];
            // future w adjacent to r but not to x would violate the forward clause
            if (cls[static_cast<size_t>(r)] == cx &&
                (nbr[static_cast<size_t>(r)] & unplaced & ~nx))
                return false;
            // future same-class-as-x w adjacent to r needs the edge r-x
            if (!(nbr[static_cast<size_t>(r)] & xbit) && (nbr[static_cast<size_t>(r)] & future_same))
                return false;
        }
        return true;
    }

    bool run() {
        if (static_cast<int>(order.size()) == n) return true;
        for (vertex x = 0; x < n; x++) {
            if (placed & (1u << x)) continue;
            if (!admissible(x)) continue;
            placed |= 1u << x;
            order.push_back(x);
            if (run()) return true;
            order.pop_back();
            placed &= ~(1u << x);
        }
        return false;
    }
};

inline std::optional<Representation> decide_search(const Tree& t, int kmax) {
    int n = t.n;
    std::vector<uint32_t> nbr(static_cast<size_t>(n), 0);
    for (auto [u, v] : t.edges) {
        nbr[static_cast<size_t>(u)] |= 1u << v;
        nbr[static_cast<size_t>(v)] |= 1u << u;
    }
    // class assignments as restricted growth strings, vertex 0 pinned to 0
    std::vector<int> cls(static_cast<size_t>(n), 0);
    std::optional<Representation> found;
    std::function<bool(int, int)> enumerate = [&](int i, int maxused) {
        if (i == n) {
            // a class inducing a vertex of same-class degree >= 3 can never be
            // strongly consistent (each class must induce a linear forest)
            for (vertex v = 0; v < n; v++) {
                int same = 0;
                for (vertex w : t.neighbors(v)) same += cls[static_cast<size_t>(w)] == cls[static_cast<size_t>(v)];
                if (same > 2) return false;
            }
            std::vector<uint32_t> clsmask(static_cast<size_t>(kmax), 0);
            for (vertex v = 0; v < n; v++) clsmask[static_cast<size_t>(cls[static_cast<size_t>(v)])] |= 1u << v;
            ordering_searcher search(n, nbr, cls, clsmask);
            if (search.run()) {
                Representation rep;
                rep.ordering = search.order;
                rep.classes = cls;
                rep.k = maxused + 1;
                found = rep;
                return true;
            }
            return false;
        }
        int limit = std::min(maxused + 1, kmax - 1);
        for (int c = 0; c <= limit; c++) {
            cls[static_cast<size_t>(i)] = c;
            if (enumerate(i + 1, std::max(maxused, c))) return true;
        }
        cls[static_cast<size_t>(i)] = 0;
        return false;
    };
    if (enumerate(1, 0)) return found;
    return std::nullopt;
}

}  // namespace detail

/// Searches for a strongly consistent representation with at most k classes.
/// Exhaustive and deterministic: class assignments are enumerated as
/// restricted growth strings with vertex 0 pinned to class 0, and for each
/// assignment the ordering is built by backtracking in ascending vertex id.
inline std::optional<Representation> pthin_decide(const Tree& t, int k,
                                                  const OracleCaps& caps = OracleCaps{}) {
    if (k < 1) throw tree_error("k must be >= 1");
    if (t.n > caps.for_k(k)) throw cap_exceeded("pthin_decide: n exceeds cap for k=" + std::to_string(k));
    if (t.n > 32) throw cap_exceeded("pthin_decide supports n <= 32");
    if (t.n <= 2) return single_class_path_representation(unique_path(t, 0, t.n - 1));
    return detail::decide_search(t, k);
}

/// Smallest k for which pthin_decide succeeds, plus its certificate.
inline std::pair<int, Representation> pthin_exact(const Tree& t,
                                                  const OracleCaps& caps = OracleCaps{}) {
    if (t.n > caps.exact) throw cap_exceeded("pthin_exact: n exceeds cap");
    for (int k = 1; k <= t.n; k++) {
        auto rep = pthin_decide(t, k, OracleCaps::uniform(caps.exact));
        if (rep) return {k, *rep};
    }
    throw tree_error("unreachable: every tree is proper n-thin");
}

/// Verdict bucket {1, 2, >=3}; needs only the k<=2 searches.
inline int pthin_bucket(const Tree& t, const OracleCaps& caps = OracleCaps{}) {
    if (pthin_decide(t, 1, caps)) return 1;
    if (pthin_decide(t, 2, caps)) return 2;
    return 3;
}

}  // namespace thinspect
