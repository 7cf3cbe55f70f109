#include <doctest.h>

#include <algorithm>
#include <set>

#include "bdom/errors.hpp"
#include "bdom/generators.hpp"
#include "bdom/graph.hpp"
#include "bdom/graph_io.hpp"
#include "bdom/trees.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bdom;

TEST_CASE("build_graph: basic shapes and rejection") {
    std::vector<Edge> one{{0, 1}};
    Graph p2 = build_graph(2, one);
    CHECK(p2.order() == 2);
    CHECK(p2.size() == 1);
    CHECK(p2 == path_graph(2));

    Graph g = fixtures::small_tree();
    std::vector<int> degs;
    for (Vertex v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
    CHECK(degs == std::vector<int>{1, 2, 3, 1, 1});

    std::vector<Edge> loop{{0, 0}};
    CHECK_THROWS_AS(build_graph(3, loop), InputError);
    std::vector<Edge> out{{0, 3}};
    CHECK_THROWS_AS(build_graph(3, out), InputError);
    std::vector<Edge> neg{{-1, 0}};
    CHECK_THROWS_AS(build_graph(3, neg), InputError);
}

TEST_CASE("build_graph collapses duplicates in either orientation") {
    std::vector<Edge> e{{0, 1}, {1, 0}, {0, 1}, {1, 2}};
    Graph g(3, e);
    CHECK(g.size() == 2);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("metrics of small graphs") {
    auto c8 = metrics(cycle_graph(8));
    CHECK(c8.diameter() == 4);
    CHECK(c8.radius() == 4);

    auto st = metrics(fixtures::small_tree());
    CHECK(st.diameter() == 3);
    CHECK(st.distance(0, 3) == 3);
    CHECK(st.eccentricity(2) == 2);

    CHECK(metrics(torus_graph(3, 3)).diameter() == 2);
    CHECK(metrics(star_graph(4)).diameter() == 2);
}

TEST_CASE("metrics reject disconnected graphs") {
    std::vector<Edge> e{{0, 1}};
    Metrics m(Graph(3, e));
    CHECK_FALSE(m.connected());
    CHECK(m.distance(0, 2) == kUnreachable);
    CHECK(m.distance(0, 1) == 1);
    CHECK_THROWS_AS(m.diameter(), CapabilityError);
    CHECK_THROWS_AS(m.eccentricity(0), CapabilityError);
}

TEST_CASE("metrics agree with the BFS oracle on random graphs") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        int n = 2 + rep % 9;
        auto edges = oracle::random_connected(n, 0.2, rng);
        Graph g(n, edges);
        Metrics m(g);
        auto d = oracle::distances(oracle::adjacency(n, edges));
        auto ecc = oracle::eccentricities(oracle::adjacency(n, edges));
        for (int u = 0; u < n; ++u) {
            CHECK(m.eccentricity(u) == ecc[u]);
            for (int v = 0; v < n; ++v) {
                CHECK(m.distance(u, v) == d[u][v]);
                CHECK(m.distance(u, v) == m.distance(v, u));
                for (int w = 0; w < n; ++w) CHECK(m.distance(u, w) <= m.distance(u, v) + m.distance(v, w));
            }
        }
        CHECK(m.radius() == *std::min_element(ecc.begin(), ecc.end()));
        CHECK(m.diameter() == *std::max_element(ecc.begin(), ecc.end()));
        CHECK(m.diameter() <= 2 * m.radius());
    }
}

TEST_CASE("cartesian products") {
    Graph sq = cartesian_product(path_graph(2), path_graph(2));
    CHECK(sq.order() == 4);
    CHECK(sq.size() == 4);

    Graph c33 = cartesian_product(cycle_graph(3), cycle_graph(3));
    CHECK(c33.order() == 9);
    for (Vertex v = 0; v < 9; ++v) CHECK(c33.degree(v) == 4);

    Graph c34 = cartesian_product(cycle_graph(3), cycle_graph(4));
    CHECK(c34.size() == 24);

    // Adjacency rules checked pair by pair.
    Graph a = path_graph(3), b = cycle_graph(4);
    Graph p = cartesian_product(a, b);
    for (int x1 = 0; x1 < 3; ++x1)
        for (int y1 = 0; y1 < 4; ++y1)
            for (int x2 = 0; x2 < 3; ++x2)
                for (int y2 = 0; y2 < 4; ++y2) {
                    bool expect = (x1 == x2 && b.adjacent(y1, y2)) || (y1 == y2 && a.adjacent(x1, x2));
                    CHECK(p.adjacent(x1 * 4 + y1, x2 * 4 + y2) == expect);
                }

    CHECK_THROWS_AS(cartesian_product(Graph(), path_graph(2)), InputError);
}

TEST_CASE("family generators") {
    CHECK(torus_graph(3, 3) == cartesian_product(cycle_graph(3), cycle_graph(3)));
    CHECK(torus_graph(4, 5) == cartesian_product(cycle_graph(4), cycle_graph(5)));
    CHECK(grid_graph(3, 4) == cartesian_product(path_graph(3), path_graph(4)));
    CHECK(canonical_form(path_graph(5)) != canonical_form(star_graph(4)));

    Graph s4 = star_graph(4);
    CHECK(s4.order() == 5);
    CHECK(s4.degree(0) == 4);

    Graph g22 = grid_graph(2, 2);
    CHECK(g22.size() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(g22.degree(v) == 2);

    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(path_graph(0), InputError);
    CHECK_THROWS_AS(torus_graph(2, 5), InputError);
    CHECK_THROWS_AS(torus_graph(5, 2), InputError);
    CHECK_THROWS_AS(grid_graph(0, 3), InputError);
    CHECK_THROWS_AS(star_graph(0), InputError);
}

TEST_CASE("torus and grid degree invariants") {
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n) {
            Graph t = torus_graph(m, n);
            for (Vertex v = 0; v < t.order(); ++v) CHECK(t.degree(v) == 4);
        }
    for (int m = 2; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            Graph g = grid_graph(m, n);
            for (Vertex v = 0; v < g.order(); ++v) {
                CHECK(g.degree(v) >= 2);
                CHECK(g.degree(v) <= 4);
            }
        }
}

TEST_CASE("row-major labels: v_{i,j} sits at (i-1)*n + (j-1)") {
    Graph t = torus_graph(3, 5);
    // v_{1,1} ~ v_{1,2}, v_{1,5}, v_{2,1}, v_{3,1}
    CHECK(t.neighbors(0) == std::vector<Vertex>{1, 4, 5, 10});
}

TEST_CASE("product diameter is additive up to 6x6") {
    std::vector<Graph> factors;
    for (int k = 1; k <= 6; ++k) factors.push_back(path_graph(k));
    for (int k = 3; k <= 6; ++k) factors.push_back(cycle_graph(k));
    for (int k = 1; k <= 5; ++k) factors.push_back(star_graph(k));
    for (const auto& a : factors)
        for (const auto& b : factors) {
            if (a.order() > 6 || b.order() > 6) continue;
            CHECK(metrics(cartesian_product(a, b)).diameter() == metrics(a).diameter() + metrics(b).diameter());
        }
}

TEST_CASE("lobster generator") {
    Graph left = lobster_graph(fixtures::diam12_spec());
    CHECK(left.order() == 19);
    CHECK(is_tree(left));
    CHECK(metrics(left).diameter() == 12);

    Graph k13 = lobster_graph({2, {{1, LimbKind::C}}});
    CHECK(canonical_form(k13) == canonical_form(star_graph(3)));

    Graph t = lobster_graph(fixtures::three_c_spec());
    CHECK(t.order() == 10);
    CHECK(is_tree(t));

    // Limb vertices: A adds its attachment vertex first.
    Graph a = lobster_graph({2, {{1, LimbKind::A}}});
    CHECK(a.order() == 5);
    CHECK(a.adjacent(1, 3));
    CHECK(a.adjacent(3, 4));

    CHECK_THROWS_AS(lobster_graph({4, {{0, LimbKind::C}}}), InputError);
    CHECK_THROWS_AS(lobster_graph({4, {{4, LimbKind::C}}}), InputError);
    CHECK_THROWS_AS(lobster_graph({4, {{2, LimbKind::C}, {2, LimbKind::B}}}), InputError);
    CHECK_THROWS_AS(lobster_graph({4, {{3, LimbKind::C}, {2, LimbKind::B}}}), InputError);
    CHECK_THROWS_AS(limb_kind_from_char('D'), InputError);
}

TEST_CASE("generated lobsters are trees") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        int d = 2 + rep % 10;
        LobsterSpec s{d, {}};
        for (int i = 1; i < d; ++i) {
            int k = std::uniform_int_distribution<int>(0, 3)(rng);
            if (k < 3) s.limbs.push_back({i, static_cast<LimbKind>(k)});
        }
        Graph g = lobster_graph(s);
        CHECK(is_connected(g));
        CHECK(g.size() == static_cast<std::size_t>(g.order() - 1));
    }
}

TEST_CASE("edge-list text round trip") {
    Graph p2 = parse_edge_list("2\n0 1\n");
    CHECK(p2 == path_graph(2));

    const char* small_text =
        "# small tree\n"
        "5\n"
        "0 1\n"
        "1 2   # spine\n"
        "\n"
        "2 3\n"
        "2 4\n";
    CHECK(parse_edge_list(small_text) == fixtures::small_tree());

    for (const Graph& g : {fixtures::small_tree(), torus_graph(3, 4), lobster_graph(fixtures::diam12_spec()), Graph(3, {})})
        CHECK(parse_edge_list(serialize(g)) == g);

    CHECK(graph_from_json(to_json(torus_graph(3, 3))) == torus_graph(3, 3));
    CHECK(to_json(path_graph(3)).dump() == R"({"edges":[[0,1],[1,2]],"n":3})");
}

TEST_CASE("edge-list errors name the line") {
    auto message = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("3\n0 3\n").find("line 2") != std::string::npos);
    CHECK(message("3\n0 1\n1 x\n").find("line 3") != std::string::npos);
    CHECK(message("3\n0 1 2\n").find("line 2") != std::string::npos);
    CHECK(message("# only a comment\n") != "");
    CHECK(message("-1\n") != "");
    CHECK(message("2\n1 1\n").find("line 2") != std::string::npos);
}
