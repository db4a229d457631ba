#pragma once

#include <random>

#include "thinspect/invariants.hpp"
#include "thinspect/oracle.hpp"
#include "thinspect/recognition.hpp"

namespace thinspect {

struct SweepResult {
    uint64_t trees = 0;
    uint64_t mismatches = 0;
    std::string first_mismatch;
};

/// Exhaustive classify-vs-oracle agreement over all labeled trees with n
/// vertices. Also validates every positive certificate on both routes.
inline SweepResult agreement_sweep(int n, const OracleCaps& caps = OracleCaps{}) {
    SweepResult res;
    res.trees = for_each_labeled_tree(n, [&](const Tree& t) {
        Classification c = classify(t);
        int got = c.v == verdict::pthin1 ? 1 : (c.v == verdict::pthin2 ? 2 : 3);
        int want = pthin_bucket(t, caps);
        bool ok = got == want;
        if (ok && c.v != verdict::at_least_3)
            ok = !check_representation(t, c.rep, true).has_value();
        if (!ok) {
            res.mismatches++;
            if (res.first_mismatch.empty())
                res.first_mismatch = "classify=" + std::to_string(got) +
                                     " oracle=" + std::to_string(want) + " tree:\n" +
                                     serialize_tree(t);
        }
        return true;
    });
    return res;
}

struct MinimalitySweepResult {
    uint64_t checks = 0;
    uint64_t gaps = 0;
    std::string first_gap;
};

namespace detail {

inline void minimality_check_one(const Tree& t, const std::vector<vertex>& ordering, bool strong,
                                 MinimalitySweepResult& res) {
    Representation lhs = min_classes_for_ordering(t, ordering, strong);
    Representation rhs = min_classes_exact(t, ordering, strong);
    bool ok = lhs.k == rhs.k;
    // both certificates must themselves be consistent with the ordering
    ok = ok && !check_representation(t, lhs, strong).has_value() &&
         !check_representation(t, rhs, strong).has_value();
    res.checks++;
    if (!ok) {
        res.gaps++;
        if (res.first_gap.empty()) {
            std::string ord;
            for (vertex v : ordering) ord += std::to_string(v) + " ";
            res.first_gap = "chain-cover k=" + std::to_string(lhs.k) + " exact k=" +
                            std::to_string(rhs.k) + (strong ? " strong" : " weak") +
                            " ordering " + ord + "tree:\n" + serialize_tree(t);
        }
    }
}

}  // namespace detail

/// min_classes_for_ordering vs min_classes_exact over every ordering of every
/// tree with n vertices, both variants.
inline MinimalitySweepResult minimality_sweep_all_orderings(int n) {
    MinimalitySweepResult res;
    for_each_labeled_tree(n, [&](const Tree& t) {
        std::vector<vertex> ordering(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) ordering[static_cast<size_t>(i)] = i;
        do {
            detail::minimality_check_one(t, ordering, false, res);
            detail::minimality_check_one(t, ordering, true, res);
        } while (std::next_permutation(ordering.begin(), ordering.end()));
        return true;
    });
    return res;
}

/// Same comparison over sampled orderings; `tree_samples` = 0 enumerates all
/// labeled trees on n vertices, otherwise that many random trees are drawn.
inline MinimalitySweepResult minimality_sweep_sampled(int n, int tree_samples,
                                                      int orderings_per_tree, uint64_t seed) {
    MinimalitySweepResult res;
    std::mt19937_64 rng(seed);
    auto run_tree = [&](const Tree& t) {
        std::vector<vertex> ordering(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) ordering[static_cast<size_t>(i)] = i;
        for (int s = 0; s < orderings_per_tree; s++) {
            std::shuffle(ordering.begin(), ordering.end(), rng);
            detail::minimality_check_one(t, ordering, false, res);
            detail::minimality_check_one(t, ordering, true, res);
        }
    };
    if (tree_samples == 0) {
        for_each_labeled_tree(n, [&](const Tree& t) {
            run_tree(t);
            return true;
        });
    } else {
        for (int i = 0; i < tree_samples; i++) run_tree(random_tree(n, rng()));
    }
    return res;
}

}  // namespace thinspect
