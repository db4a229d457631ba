#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>

#include "thinspect/families.hpp"
#include "thinspect/patterns.hpp"

using namespace thinspect;

static std::multiset<int> degree_multiset(const Tree& t) {
    std::multiset<int> out;
    for (vertex v = 0; v < t.n; v++) out.insert(t.degree(v));
    return out;
}

TEST_CASE("named instances have the documented shapes") {
    Tree t0 = build_family({family::t0, {}});
    REQUIRE(t0.n == 11);
    REQUIRE(t0.degree(0) == 5);
    REQUIRE(t0 == build_family({family::spider, {5, 2}}));
    REQUIRE(degree_multiset(t0) == std::multiset<int>{5, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1});

    Tree t1 = build_family({family::t1, {}});
    REQUIRE(t1.n == 13);
    REQUIRE(t1.degree(0) == 3);
    for (vertex b : t1.neighbors(0)) REQUIRE(t1.degree(b) == 4);

    Tree t2 = build_family({family::t2, {2, 2, 2}});
    REQUIRE(t2.n == 13);
    REQUIRE(t2.degree(0) == 3);
    int branch_vertices = 0;
    for (vertex v = 0; v < t2.n; v++)
        if (v != 0 && t2.degree(v) == 3) {
            branch_vertices++;
            REQUIRE(distance(t2, 0, v) == 2);
        }
    REQUIRE(branch_vertices == 3);

    REQUIRE(build_family({family::t3, {2, 2}}).n == 13);
    REQUIRE(build_family({family::t4, {2}}).n == 13);
    REQUIRE(build_family({family::t5, {1, 1}}).n == 11);
}

TEST_CASE("t2 vertex count follows the subdivision parameters") {
    for (int i = 2; i <= 4; i++)
        for (int j = 2; j <= 4; j++)
            for (int k = 2; k <= 4; k++)
                REQUIRE(build_family({family::t2, {i, j, k}}).n == 7 + i + j + k);
    REQUIRE(build_family({family::t3, {3, 5}}).n == 9 + 3 + 5);
    REQUIRE(build_family({family::t4, {4}}).n == 11 + 4);
    REQUIRE(build_family({family::t5, {2, 3}}).n == 9 + 2 + 3);
}

TEST_CASE("family parameter minimums are enforced") {
    REQUIRE_THROWS_AS(build_family({family::t2, {1, 2, 2}}), tree_error);
    REQUIRE_THROWS_AS(build_family({family::t3, {1, 2}}), tree_error);
    REQUIRE_THROWS_AS(build_family({family::t4, {1}}), tree_error);
    REQUIRE_THROWS_AS(build_family({family::t5, {0, 1}}), tree_error);
    REQUIRE_THROWS_AS(build_family({family::path, {0}}), tree_error);
}

TEST_CASE("the counterexample tree splits into three spider copies at vertex 0") {
    Tree ta = build_family({family::ta, {}});
    REQUIRE(ta.n == 34);
    REQUIRE(ta.degree(0) == 3);
    for (vertex w : ta.neighbors(0)) REQUIRE(ta.degree(w) == 2);
    auto comps = components_after_removal(ta, {0});
    REQUIRE(comps.size() == 3);
    Tree t0 = build_family({family::t0, {}});
    for (const auto& comp : comps) {
        REQUIRE(comp.size() == 11);
        auto [sub, orig] = induced_tree(ta, comp);
        REQUIRE(tree_isomorphism(t0, sub).has_value());
    }
}

TEST_CASE("prufer code round-trips") {
    for (uint64_t seed = 0; seed < 100; seed++) {
        int n = 3 + static_cast<int>(seed % 20);
        Tree t = random_tree(n, seed);
        REQUIRE(prufer_decode(n, prufer_encode(t)) == t);
    }
}

TEST_CASE("labeled tree enumeration matches the Cayley counts") {
    uint64_t count2 = for_each_labeled_tree(2, [](const Tree&) { return true; });
    REQUIRE(count2 == 1);
    uint64_t count4 = for_each_labeled_tree(4, [](const Tree&) { return true; });
    REQUIRE(count4 == 16);
    uint64_t count8 = for_each_labeled_tree(8, [](const Tree&) { return true; });
    REQUIRE(count8 == 262144);
    REQUIRE_THROWS_AS(for_each_labeled_tree(10, [](const Tree&) { return true; }), tree_error);
}

TEST_CASE("random_tree degenerate sizes") {
    REQUIRE(random_tree(1, 7).n == 1);
    REQUIRE(random_tree(2, 7).edges == std::vector<std::pair<vertex, vertex>>{{0, 1}});
    for (uint64_t seed = 0; seed < 20; seed++)
        REQUIRE(degree_multiset(random_tree(3, seed)) == std::multiset<int>{1, 1, 2});
    REQUIRE(random_tree(9, 42) == random_tree(9, 42));
}

TEST_CASE("random_tree sampling is uniform across labeled trees") {
    // n=5: each of the 125 labeled trees individually within 5 sigma
    const int samples = 100000;
    std::map<std::vector<std::pair<vertex, vertex>>, int> freq;
    for (int s = 0; s < samples; s++) freq[random_tree(5, static_cast<uint64_t>(s)).edges]++;
    REQUIRE(freq.size() == 125);
    double expect = samples / 125.0;
    double sigma = std::sqrt(samples * (1.0 / 125) * (1 - 1.0 / 125));
    for (const auto& [edges, count] : freq)
        REQUIRE(std::abs(count - expect) <= 5 * sigma);

    // n=8: 262144 cells are too sparse for a per-cell bound at this sample
    // size, so aggregate into 64 buckets by the first two code symbols
    std::vector<int> bucket(64, 0);
    for (int s = 0; s < samples; s++) {
        auto seq = prufer_encode(random_tree(8, 1000000 + static_cast<uint64_t>(s)));
        bucket[static_cast<size_t>(seq[0] * 8 + seq[1])]++;
    }
    double expect8 = samples / 64.0;
    double sigma8 = std::sqrt(samples * (1.0 / 64) * (1 - 1.0 / 64));
    for (int b = 0; b < 64; b++) REQUIRE(std::abs(bucket[static_cast<size_t>(b)] - expect8) <= 5 * sigma8);
}

TEST_CASE("random caterpillar generators") {
    for (uint64_t seed = 0; seed < 100; seed++) {
        int n = 1 + static_cast<int>(seed % 40);
        Tree c = random_caterpillar(n, seed);
        REQUIRE(c.n == n);
        REQUIRE(is_caterpillar(c));
        Tree lhc = random_long_haired_caterpillar(n, seed);
        REQUIRE(lhc.n == n);
        for (vertex v = 0; v < lhc.n; v++) REQUIRE(lhc.degree(v) <= 3);
    }
}
