#include <catch2/catch_amalgamated.hpp>

#include "brute.hpp"
#include "thinspect/oracle.hpp"
#include "thinspect/recognition.hpp"

using namespace thinspect;

static Tree path_n(int n) { return build_family({family::path, {n}}); }
static Tree star_n(int n) { return build_family({family::star, {n}}); }

TEST_CASE("degree condition report") {
    auto p6 = degree_condition_report(path_n(6));
    REQUIRE_FALSE(p6.cond1);
    REQUIRE(p6.cond2);

    auto t0 = degree_condition_report(build_family({family::t0, {}}));
    REQUIRE(t0.cond1);
    REQUIRE_FALSE(t0.cond2);
    REQUIRE(t0.cond2_offender == 0);  // degree 5, every neighbor of degree 2

    auto k17 = degree_condition_report(star_n(8));
    REQUIRE(k17.cond1);
    REQUIRE(k17.cond2);  // all neighbors are leaves
}

TEST_CASE("path clause checks") {
    Tree k15 = star_n(6);
    REQUIRE_FALSE(path_satisfies_c0(k15, unique_path(k15, 1, 2)).has_value());

    Tree t2 = build_family({family::t2, {2, 2, 2}});
    auto fail = path_satisfies_c0(t2, unique_path(t2, 3, 7));
    REQUIRE(fail.has_value());
    REQUIRE(fail->clause == c0_clause::clause_3b_i);
    REQUIRE(fail->witness == 10);  // the third branch vertex

    Tree t5 = build_family({family::t5, {1, 1}});
    auto fail5 = path_satisfies_c0(t5, unique_path(t5, 6, 9));
    REQUIRE(fail5.has_value());
    REQUIRE(fail5->clause == c0_clause::clause_3b_ii);
    REQUIRE(fail5->witness == 2);  // its path neighbor has degree 4

    REQUIRE_THROWS_AS(path_satisfies_c0(t5, tree_path{0, 5, 1}), tree_error);
}

TEST_CASE("find_c0 on positives and negatives") {
    REQUIRE(find_c0(random_caterpillar(25, 7)).has_value());
    REQUIRE_FALSE(find_c0(build_family({family::t1, {}})).has_value());
    Tree lhc = random_long_haired_caterpillar(30, 9);
    REQUIRE((is_path_graph(lhc) || find_c0(lhc).has_value()));
}

TEST_CASE("clause-satisfying paths can still be infeasible for the construction") {
    // five legs of length 2 with one end chopped: the short path through the
    // stub leg satisfies the clauses but leaves three heavy branches hanging
    // off the degree-5 center, which no two-class partition can serve
    Tree t = remove_leaf(build_family({family::t0, {}}), 2);
    tree_path bad{1, 0, 2, 3};
    REQUIRE_FALSE(path_satisfies_c0(t, bad).has_value());
    REQUIRE_FALSE(construction_feasible(t, bad));
    REQUIRE_THROWS_AS(build_representation(t, bad), tree_error);

    auto good = find_c0(t);
    REQUIRE(good.has_value());
    REQUIRE(construction_feasible(t, *good));
    Representation rep = build_representation(t, *good);
    REQUIRE_FALSE(check_representation(t, rep, true).has_value());
}

TEST_CASE("build_representation follows the degree cases") {
    Tree k14 = star_n(5);
    tree_path c0 = unique_path(k14, 1, 2);
    tree_path extended;
    Representation rep = build_representation(k14, c0, &extended);
    REQUIRE(rep.ordering == std::vector<vertex>{1, 3, 0, 4, 2});
    REQUIRE(rep.classes == std::vector<int>{0, 0, 0, 1, 1});
    REQUIRE(rep.k == 2);
    REQUIRE(extended == c0);
    REQUIRE_FALSE(check_representation(k14, rep, true).has_value());
}

TEST_CASE("build_representation keeps caterpillar leaves next to their spine vertex") {
    Tree c = build_family({family::caterpillar, {2, 0, 3, 1, 4}});
    auto c0 = find_c0(c);
    REQUIRE(c0.has_value());
    tree_path extended;
    Representation rep = build_representation(c, *c0, &extended);
    REQUIRE_FALSE(check_representation(c, rep, true).has_value());
    std::vector<int> pos(static_cast<size_t>(c.n));
    for (int i = 0; i < c.n; i++) pos[static_cast<size_t>(rep.ordering[static_cast<size_t>(i)])] = i;
    for (vertex v = 0; v < c.n; v++) {
        if (rep.classes[static_cast<size_t>(v)] != 1) continue;
        vertex spine = c.neighbors(v)[0];
        // everything strictly between an off-path leaf and its spine vertex
        // is another off-path leaf of the same spine vertex
        int lo = std::min(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(spine)]);
        int hi = std::max(pos[static_cast<size_t>(v)], pos[static_cast<size_t>(spine)]);
        for (int i = lo + 1; i < hi; i++) {
            vertex w = rep.ordering[static_cast<size_t>(i)];
            REQUIRE(rep.classes[static_cast<size_t>(w)] == 1);
            REQUIRE(c.neighbors(w)[0] == spine);
        }
    }
}

TEST_CASE("build_representation collapses to one class on a full path") {
    Tree p5 = path_n(5);
    Representation rep = build_representation(p5, unique_path(p5, 0, 4));
    REQUIRE(rep.k == 1);
    REQUIRE_FALSE(check_representation(p5, rep, true).has_value());
}

TEST_CASE("classify on the worked examples") {
    REQUIRE(classify(path_n(9)).v == verdict::pthin1);
    REQUIRE(classify(path_n(1)).v == verdict::pthin1);
    REQUIRE(classify(path_n(2)).v == verdict::pthin1);

    Classification c = classify(star_n(4));
    REQUIRE(c.v == verdict::pthin2);
    REQUIRE(c.rep.k == 2);
    REQUIRE_FALSE(check_representation(star_n(4), c.rep, true).has_value());

    Classification ta = classify(build_family({family::ta, {}}));
    REQUIRE(ta.v == verdict::at_least_3);
    REQUIRE(ta.witness->spec.fam == family::t0);

    Classification t0c = classify(build_family({family::t0, {}}));
    REQUIRE(t0c.v == verdict::at_least_3);
    REQUIRE(t0c.witness->spec.fam == family::t0);
    std::vector<vertex> identity(11);
    std::iota(identity.begin(), identity.end(), 0);
    REQUIRE(t0c.witness->mapping == identity);

    Classification t1c = classify(build_family({family::t1, {}}));
    REQUIRE(t1c.v == verdict::at_least_3);
    REQUIRE(t1c.witness->spec.fam == family::t1);
}

TEST_CASE("pendant growth does not hide the witness") {
    // one extra leaf on a leg end: the witness still lives on the original
    // eleven vertices
    Tree t0 = build_family({family::t0, {}});
    auto edges = t0.edges;
    edges.push_back({2, 11});
    Tree grown = tree_from_edges(12, edges);
    Classification c = classify(grown);
    REQUIRE(c.v == verdict::at_least_3);
    REQUIRE(c.witness->spec.fam == family::t0);
    for (vertex v : c.witness->mapping) REQUIRE(v <= 10);
}

TEST_CASE("extract_witness refuses positive instances") {
    REQUIRE_THROWS_AS(extract_witness(star_n(4)), tree_error);
    REQUIRE_THROWS_AS(extract_witness(path_n(5)), tree_error);
}

TEST_CASE("pthin2 certificates match the structural corollaries") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 150; trial++) {
        Tree t = random_caterpillar(4 + static_cast<int>(rng() % 25), rng());
        Classification c = classify(t);
        if (c.v != verdict::pthin2) continue;
        std::set<vertex> class0;
        for (vertex v = 0; v < t.n; v++)
            if (c.rep.classes[static_cast<size_t>(v)] == 0) class0.insert(v);
        REQUIRE(class0 == std::set<vertex>(c.c0.begin(), c.c0.end()));
        for (const auto& comp : components_after_removal(t, c.c0))
            REQUIRE(is_path_graph(induced_tree(t, comp).first));
    }
}

TEST_CASE("a satisfying simple path exists iff a leaf-to-leaf one does iff find_c0 succeeds") {
    auto clause_ok = [](const Tree& t) {
        return [&t](const std::vector<vertex>& p) { return !path_satisfies_c0(t, p).has_value(); };
    };
    for (int n = 2; n <= 7; n++) {
        for_each_labeled_tree(n, [&](const Tree& t) {
            bool any = brute::some_path_satisfies_condition3(t, clause_ok(t));
            bool leaf_to_leaf = false;
            auto ls = leaves_of(t);
            for (size_t i = 0; i < ls.size() && !leaf_to_leaf; i++)
                for (size_t j = i + 1; j < ls.size() && !leaf_to_leaf; j++)
                    leaf_to_leaf = !path_satisfies_c0(t, unique_path(t, ls[i], ls[j])).has_value();
            REQUIRE(any == leaf_to_leaf);
            REQUIRE(find_c0(t).has_value() == any);
            return true;
        });
    }
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 20000; trial++) {
        Tree t = random_tree(8, rng());
        bool any = brute::some_path_satisfies_condition3(t, clause_ok(t));
        REQUIRE(find_c0(t).has_value() == any);
    }
}

TEST_CASE("condition_report carries the path or the first failure") {
    auto good = condition_report(random_caterpillar(20, 4));
    REQUIRE(good.c0.has_value());
    REQUIRE_FALSE(good.c0_failure.has_value());

    auto bad = condition_report(build_family({family::t1, {}}));
    REQUIRE_FALSE(bad.c0.has_value());
    REQUIRE(bad.c0_failure.has_value());
}

TEST_CASE("detection and classification agree on the forbidden side") {
    for (int n = 1; n <= 7; n++) {
        for_each_labeled_tree(n, [&](const Tree& t) {
            REQUIRE(detect(t).has_value() == (classify(t).v == verdict::at_least_3));
            return true;
        });
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; trial++) {
        int n = 9 + static_cast<int>(rng() % 12);
        Tree t = random_tree(n, rng());
        REQUIRE(detect(t).has_value() == (classify(t).v == verdict::at_least_3));
    }
}

TEST_CASE("classify agrees with the oracle on random mid-size trees") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; trial++) {
        int n = 9 + static_cast<int>(rng() % 6);
        Tree t = random_tree(n, rng());
        Classification c = classify(t);
        int got = c.v == verdict::pthin1 ? 1 : (c.v == verdict::pthin2 ? 2 : 3);
        REQUIRE(got == pthin_bucket(t));
    }
}
