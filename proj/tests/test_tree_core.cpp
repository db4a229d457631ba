#include <catch2/catch_amalgamated.hpp>

#include "brute.hpp"
#include "thinspect/families.hpp"
#include "thinspect/tree.hpp"

using namespace thinspect;

static Tree claw() { return build_family({family::star, {4}}); }
static Tree path_n(int n) { return build_family({family::path, {n}}); }

TEST_CASE("parse_tree accepts well-formed input") {
    Tree t = parse_tree("2\n0 1\n");
    REQUIRE(t.n == 2);
    REQUIRE(t.edges == std::vector<std::pair<vertex, vertex>>{{0, 1}});

    Tree k13 = parse_tree("4\n0 1\n0 2\n0 3\n");
    REQUIRE(k13 == claw());

    // missing trailing newline is fine
    REQUIRE(parse_tree("2\n0 1").n == 2);
}

TEST_CASE("parse_tree rejects non-trees with the offending line") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_tree(text);
        } catch (const parse_error& e) {
            return std::pair{e.kind, e.line};
        }
        return std::pair{parse_error_kind::malformed_line, -1};
    };
    REQUIRE(kind_of("4\n0 1\n0 2\n1 2") ==
            std::pair{parse_error_kind::cyclic, 4});  // cycle closes on line 4
    REQUIRE(kind_of("2\n0 0") == std::pair{parse_error_kind::self_loop, 2});
    REQUIRE(kind_of("3\n0 1\n1 0") == std::pair{parse_error_kind::duplicate_edge, 3});
    REQUIRE(kind_of("3\n0 1") == std::pair{parse_error_kind::cyclic, 3});  // edge count short
    REQUIRE(kind_of("3\nx y\n0 1") == std::pair{parse_error_kind::malformed_line, 2});
    REQUIRE(kind_of("3\n0 7\n0 1") == std::pair{parse_error_kind::malformed_line, 2});
    REQUIRE(kind_of("") == std::pair{parse_error_kind::malformed_line, 1});
}

TEST_CASE("serialize_tree emits canonical edge order") {
    REQUIRE(serialize_tree(claw()) == "4\n0 1\n0 2\n0 3\n");
    REQUIRE(serialize_tree(build_family({family::path, {1}})) == "1\n");
}

TEST_CASE("serialize/parse round-trips on random trees") {
    for (uint64_t seed = 0; seed < 200; seed++) {
        int n = 1 + static_cast<int>(seed % 40);
        Tree t = random_tree(n, seed);
        REQUIRE(parse_tree(serialize_tree(t)) == t);
    }
}

TEST_CASE("unique_path examples") {
    REQUIRE(unique_path(path_n(3), 0, 2) == tree_path{0, 1, 2});
    REQUIRE(unique_path(claw(), 1, 2) == tree_path{1, 0, 2});
    // spider leg-end to opposite leg-end runs through the center
    Tree t0 = build_family({family::t0, {}});
    REQUIRE(unique_path(t0, 2, 4).size() == 5);
    REQUIRE(unique_path(t0, 2, 4)[2] == 0);
    REQUIRE_THROWS_AS(unique_path(t0, 0, 99), tree_error);
}

TEST_CASE("unique_path length equals BFS distance on random trees") {
    for (uint64_t seed = 0; seed < 30; seed++) {
        Tree t = random_tree(12, seed);
        // reference: BFS layers
        for (vertex s = 0; s < t.n; s++) {
            std::vector<int> dist(static_cast<size_t>(t.n), -1);
            std::vector<vertex> q{s};
            dist[static_cast<size_t>(s)] = 0;
            for (size_t i = 0; i < q.size(); i++)
                for (vertex w : t.neighbors(q[i]))
                    if (dist[static_cast<size_t>(w)] < 0) {
                        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(q[i])] + 1;
                        q.push_back(w);
                    }
            for (vertex v = 0; v < t.n; v++)
                REQUIRE(static_cast<int>(unique_path(t, s, v).size()) - 1 ==
                        dist[static_cast<size_t>(v)]);
        }
    }
}

TEST_CASE("nexus_of examples") {
    REQUIRE(nexus_of(claw(), 1, 2, 3) == 0);
    REQUIRE_FALSE(nexus_of(path_n(5), 0, 2, 4).has_value());
    Tree t0 = build_family({family::t0, {}});
    REQUIRE(nexus_of(t0, 2, 4, 6) == 0);  // three leg ends meet at the degree-5 center
    REQUIRE_THROWS_AS(nexus_of(claw(), 1, 1, 2), tree_error);
}

TEST_CASE("nexus exists exactly when the triple is not on one simple path") {
    for (int n = 3; n <= 7; n++) {
        for_each_labeled_tree(n, [&](const Tree& t) {
            for (vertex a = 0; a < t.n; a++)
                for (vertex b = a + 1; b < t.n; b++)
                    for (vertex c = b + 1; c < t.n; c++) {
                        bool on_common_path = false;
                        for (auto [x, y, z] : {std::array{a, b, c}, {a, c, b}, {b, c, a}}) {
                            auto p = unique_path(t, x, y);
                            on_common_path |= std::find(p.begin(), p.end(), z) != p.end();
                        }
                        REQUIRE(nexus_of(t, a, b, c).has_value() == !on_common_path);
                    }
            return true;
        });
    }
}

TEST_CASE("is_path_graph") {
    REQUIRE(is_path_graph(path_n(5)));
    REQUIRE_FALSE(is_path_graph(claw()));
    REQUIRE(is_path_graph(path_n(1)));
}

TEST_CASE("is_caterpillar examples") {
    REQUIRE(is_caterpillar(build_family({family::star, {6}})));
    REQUIRE_FALSE(is_caterpillar(build_family({family::t0, {}})));
    // the subdivided claw (bipartite claw) is not a caterpillar
    REQUIRE_FALSE(is_caterpillar(build_family({family::spider, {3, 2}})));
    REQUIRE(is_caterpillar(path_n(1)));
    REQUIRE(is_caterpillar(path_n(2)));
}

TEST_CASE("is_caterpillar agrees with the closed-neighborhood definition") {
    for (int n = 1; n <= 8; n++) {
        uint64_t mismatches = 0;
        for_each_labeled_tree(n, [&](const Tree& t) {
            if (is_caterpillar(t) != brute::caterpillar_by_definition(t)) mismatches++;
            return true;
        });
        REQUIRE(mismatches == 0);
    }
}

TEST_CASE("components and induced subtrees") {
    Tree t0 = build_family({family::t0, {}});
    auto comps = components_after_removal(t0, {0});
    REQUIRE(comps.size() == 5);
    for (const auto& c : comps) REQUIRE(c.size() == 2);

    auto [sub, orig] = induced_tree(t0, {0, 1, 2, 3, 4});
    REQUIRE(sub.n == 5);
    REQUIRE(orig == std::vector<vertex>{0, 1, 2, 3, 4});

    Tree less = remove_leaf(claw(), 3);
    REQUIRE(less.n == 3);
    REQUIRE(is_path_graph(less));
    REQUIRE_THROWS_AS(remove_leaf(claw(), 0), tree_error);
}
