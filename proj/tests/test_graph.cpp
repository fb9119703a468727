#include "tollcvx/graph.hpp"

#include <stdexcept>

#include "doctest.h"
#include "tollcvx/enumerate.hpp"
#include "tollcvx/io.hpp"
#include "tollcvx/product.hpp"

using namespace tollcvx;

TEST_CASE("from_edges builds simple graphs") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(1, 0));

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.edge_count() == 5);
    CHECK(c5.degree(0) == 2);

    // duplicates collapse
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}});
    CHECK(p4.edge_count() == 3);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("adjacency symmetry and irreflexivity after construction") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            for (int u = 0; u < n; ++u) {
                CHECK(!g.has_edge(u, u));
                for (int v : g.neighbors(u)) CHECK(g.has_edge(v, u));
            }
        });
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(named::cycle(5)));
    CHECK(is_connected(named::path(4)));
    CHECK(!is_connected(Graph(2)));
}

TEST_CASE("separates") {
    Graph p4 = named::path(4);
    CHECK(separates(p4, VertexSet(4, {1}), 0, 3));

    Graph c5 = named::cycle(5);
    CHECK(!separates(c5, VertexSet(5, {1}), 0, 3));
    // N[0]-{3} = {0,1,4}: vertices 2 and 3 stay connected
    CHECK(!separates(c5, VertexSet(5, {0, 1, 4}), 3, 2));

    CHECK_THROWS_AS(separates(p4, VertexSet(4, {1}), 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(separates(p4, VertexSet(4, {1}), 0, 0), std::invalid_argument);
}

TEST_CASE("cut vertices") {
    CHECK(cut_vertices(named::path(4)) == VertexSet(4, {1, 2}));
    CHECK(cut_vertices(named::cycle(5)).empty());
    CHECK(cut_vertices(named::fig3_spider()) == VertexSet(7, {1, 2, 3, 5}));
    CHECK_THROWS_AS(cut_vertices(Graph(3)), std::invalid_argument);
}

TEST_CASE("cut vertex iff some singleton separates a pair") {
    for (int n = 2; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            VertexSet cuts = cut_vertices(g);
            for (int v = 0; v < n; ++v) {
                bool separating = false;
                for (int s = 0; s < n && !separating; ++s) {
                    if (s == v) continue;
                    for (int t = s + 1; t < n; ++t) {
                        if (t == v) continue;
                        if (separates(g, VertexSet(n, {v}), s, t)) {
                            separating = true;
                            break;
                        }
                    }
                }
                CHECK(separating == cuts.test(v));
            }
        });
    }
}

TEST_CASE("non-cut non-adjacent pair") {
    CHECK(non_cut_non_adjacent_pair(named::cycle(5)) == std::pair<int, int>{0, 2});
    CHECK(non_cut_non_adjacent_pair(named::path(4)) == std::pair<int, int>{0, 3});
    CHECK_THROWS_AS(non_cut_non_adjacent_pair(named::complete(4)), std::invalid_argument);
}

TEST_CASE("vertex classes") {
    VertexClasses star = vertex_classes(named::star(3));
    CHECK(star.simplicial == VertexSet(4, {1, 2, 3}));
    CHECK(star.universal == VertexSet(4, {0}));

    VertexClasses c5 = vertex_classes(named::cycle(5));
    CHECK(c5.simplicial.empty());
    CHECK(c5.universal.empty());

    VertexClasses p4 = vertex_classes(named::path(4));
    CHECK(p4.simplicial == VertexSet(4, {0, 3}));
    CHECK(p4.universal.empty());
}

TEST_CASE("cartesian product of K2 and K2 is C4") {
    ProductGraph p = product(named::complete(2), named::complete(2), ProductKind::cartesian);
    CHECK(p.graph.vertex_count() == 4);
    CHECK(p.graph.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(p.graph.degree(v) == 2);
}

TEST_CASE("lexicographic product of K2 and K2 is K4") {
    ProductGraph p = product(named::complete(2), named::complete(2), ProductKind::lexicographic);
    CHECK(is_complete(p.graph));
    CHECK(p.graph.vertex_count() == 4);
}

TEST_CASE("P4 box P4 is the 4x4 grid") {
    ProductGraph p = product(named::path(4), named::path(4), ProductKind::cartesian);
    CHECK(p.graph.vertex_count() == 16);
    CHECK(p.graph.edge_count() == 24);
    CHECK(p.graph.has_edge(p.encode(1, 1), p.encode(1, 2)));
    CHECK(p.graph.has_edge(p.encode(1, 1), p.encode(2, 1)));
    CHECK(!p.graph.has_edge(p.encode(1, 1), p.encode(2, 2)));
}

TEST_CASE("product adjacency laws, layers, encode/decode") {
    Graph g = named::path(3);
    Graph h = named::star(3);
    for (ProductKind kind : {ProductKind::cartesian, ProductKind::lexicographic}) {
        ProductGraph p = product(g, h, kind);
        int ng = g.vertex_count(), nh = h.vertex_count();
        for (int v = 0; v < ng * nh; ++v) {
            auto [a, x] = p.decode(v);
            CHECK(p.encode(a, x) == v);
        }
        for (int a = 0; a < ng; ++a)
            for (int x = 0; x < nh; ++x)
                for (int b = 0; b < ng; ++b)
                    for (int y = 0; y < nh; ++y) {
                        if (a == b && x == y) continue;
                        bool want = kind == ProductKind::cartesian
                                        ? ((g.has_edge(a, b) && x == y) ||
                                           (a == b && h.has_edge(x, y)))
                                        : (g.has_edge(a, b) ||
                                           (a == b && h.has_edge(x, y)));
                        CHECK(p.graph.has_edge(p.encode(a, x), p.encode(b, y)) == want);
                    }
        // layers induce the factors with identical labels
        for (int x = 0; x < nh; ++x)
            for (int a = 0; a < ng; ++a)
                for (int b = a + 1; b < ng; ++b)
                    CHECK(p.graph.has_edge(p.encode(a, x), p.encode(b, x)) == g.has_edge(a, b));
        for (int a = 0; a < ng; ++a)
            for (int x = 0; x < nh; ++x)
                for (int y = x + 1; y < nh; ++y)
                    CHECK(p.graph.has_edge(p.encode(a, x), p.encode(a, y)) == h.has_edge(x, y));
        CHECK(p.g_layer(0).count() == ng);
        CHECK(p.h_layer(0).count() == nh);
    }
}
