#include "tollcvx/convexity.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "tollcvx/enumerate.hpp"
#include "tollcvx/io.hpp"
#include "tollcvx/product.hpp"

using namespace tollcvx;

TEST_CASE("toll interval basics") {
    Graph c5 = named::cycle(5);
    CHECK(toll_interval(c5, 0, 0) == VertexSet(5, {0}));
    CHECK(toll_interval(c5, 0, 1) == VertexSet(5, {0, 1}));  // adjacent pair
    CHECK(toll_interval(c5, 0, 2) == VertexSet::full(5));

    // in the star, the third leaf never joins a walk between two others
    Graph star = named::star(3);
    CHECK(toll_interval(star, 1, 2) == VertexSet(4, {0, 1, 2}));

    CHECK_THROWS_AS(toll_interval(Graph(3), 0, 1), std::invalid_argument);
}

TEST_CASE("oracle on the path and cycle") {
    Graph p4 = named::path(4);
    CHECK(toll_interval_oracle(p4, 0, 3) == VertexSet::full(4));
    Graph c5 = named::cycle(5);
    CHECK(toll_interval_oracle(c5, 0, 2) == toll_interval(c5, 0, 2));
    CHECK_THROWS_AS(toll_interval_oracle(named::cycle(9), 0, 2), std::invalid_argument);
}

TEST_CASE("oracle equals separator route exhaustively at n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v)
                    CHECK(toll_interval(g, u, v) == toll_interval_oracle(g, u, v));
        });
    }
}

TEST_CASE("oracle equals separator route on random graphs at n = 7, 8") {
    std::mt19937 rng(20250809);
    for (int n : {7, 8}) {
        int bits = edge_bit_count(n);
        int tried = 0;
        while (tried < 25) {
            std::uint64_t mask = rng() & ((std::uint64_t{1} << bits) - 1);
            Graph g = graph_from_edge_mask(n, mask);
            if (!is_connected(g)) continue;
            ++tried;
            for (int u = 0; u < n; ++u)
                for (int v = u; v < n; ++v)
                    CHECK(toll_interval(g, u, v) == toll_interval_oracle(g, u, v));
        }
    }
}

TEST_CASE("interval symmetry, extensivity, geodesic containment at n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            for (int u = 0; u < n; ++u) {
                for (int v = u; v < n; ++v) {
                    VertexSet t = toll_interval(g, u, v);
                    CHECK(t == toll_interval(g, v, u));
                    CHECK(t.test(u));
                    CHECK(t.test(v));
                    CHECK(geodesic_interval(g, u, v).is_subset_of(t));
                }
            }
        });
    }
}

TEST_CASE("geodesic interval") {
    Graph c5 = named::cycle(5);
    CHECK(geodesic_interval(c5, 0, 1) == VertexSet(5, {0, 1}));
    CHECK(geodesic_interval(c5, 0, 2) == VertexSet(5, {0, 1, 2}));
    Graph c4 = named::cycle(4);
    CHECK(geodesic_interval(c4, 0, 2) == VertexSet::full(4));
}

TEST_CASE("toll closure") {
    Graph c5 = named::cycle(5);
    CHECK(toll_closure(c5, VertexSet(5)).empty());
    CHECK(toll_closure(c5, VertexSet(5, {3})) == VertexSet(5, {3}));
    CHECK(toll_closure(c5, VertexSet(5, {0, 2})) == VertexSet::full(5));
}

TEST_CASE("hull trace") {
    Graph c5 = named::cycle(5);
    HullTrace whole = t_convex_hull(c5, VertexSet::full(5));
    CHECK(whole.stages.size() == 1);
    CHECK(whole.fixed() == VertexSet::full(5));

    HullTrace two = t_convex_hull(c5, VertexSet(5, {0, 2}));
    CHECK(two.stages.size() == 2);
    CHECK(two.fixed() == VertexSet::full(5));

    Graph p4 = named::path(4);
    CHECK(t_convex_hull(p4, VertexSet(4, {0, 3})).fixed() == VertexSet::full(4));
}

TEST_CASE("hull is the minimal t-convex superset (checked by enumeration, n <= 4)") {
    for (int n = 2; n <= 4; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            IntervalTable table(g);
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                VertexSet s(n);
                for (int v = 0; v < n; ++v)
                    if (m >> v & 1) s.set(v);
                VertexSet fixed = hull_from_table(table, s).fixed();
                CHECK(closure_from_table(table, fixed) == fixed);  // idempotent
                // no strictly smaller t-convex superset exists
                int best = n + 1;
                for (std::uint32_t c = 0; c < (1u << n); ++c) {
                    VertexSet y(n);
                    for (int v = 0; v < n; ++v)
                        if (c >> v & 1) y.set(v);
                    if (!s.is_subset_of(y)) continue;
                    if (closure_from_table(table, y) == y && y.count() < best)
                        best = y.count();
                }
                CHECK(fixed.count() == best);
            }
        });
    }
}

TEST_CASE("convexity methods agree on every subset of every connected graph, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                VertexSet y(n);
                for (int v = 0; v < n; ++v)
                    if (m >> v & 1) y.set(v);
                CHECK(is_t_convex(g, y, ConvexityMethod::closure) ==
                      is_t_convex(g, y, ConvexityMethod::separator));
            }
        });
    }
}

TEST_CASE("the full vertex set is t-convex, the C5xK3 block is not") {
    Graph c5 = named::cycle(5);
    CHECK(is_t_convex(c5, VertexSet::full(5)));
    CHECK(is_t_convex(named::path(4), VertexSet(4, {1, 2})));

    ProductGraph p = product(c5, named::complete(3), ProductKind::cartesian);
    VertexSet block(15);
    for (int g = 1; g <= 3; ++g)
        for (int h = 0; h < 3; ++h) block.set(p.encode(g, h));
    CHECK(!is_t_convex(p.graph, block));
    CHECK(!is_t_convex(p.graph, block, ConvexityMethod::separator));
}

TEST_CASE("extreme vertices") {
    CHECK(extreme_vertices(named::complete(4)) == VertexSet::full(4));
    CHECK(extreme_vertices(named::fig3_spider()).empty());
    CHECK(extreme_vertices(named::path(4)) == VertexSet(4, {0, 3}));
    // simplicial without being extreme: the spider has three simplicial leaves
    CHECK(vertex_classes(named::fig3_spider()).simplicial.count() == 3);
}

TEST_CASE("extreme vertices are simplicial, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            CHECK(extreme_vertices(g).is_subset_of(vertex_classes(g).simplicial));
        });
    }
}

TEST_CASE("interval table matches direct computation") {
    Graph g = named::fig3_spider();
    IntervalTable toll_table(g, IntervalKind::toll);
    IntervalTable geo_table(g, IntervalKind::geodesic);
    for (int u = 0; u < 7; ++u) {
        for (int v = u; v < 7; ++v) {
            CHECK(toll_table.at(u, v) == toll_interval(g, u, v));
            CHECK(geo_table.at(u, v) == geodesic_interval(g, u, v));
            CHECK(interval(g, u, v, IntervalKind::toll) == toll_table.at(u, v));
        }
    }
}

TEST_CASE("grid interval regression: corner vertex stays outside") {
    ProductGraph p = product(named::path(4), named::path(4), ProductKind::cartesian);
    int u = p.encode(1, 1), v = p.encode(3, 3);
    VertexSet fast = toll_interval(p.graph, u, v);
    CHECK(!fast.test(p.encode(0, 0)));
    CHECK(fast.count() == 15);
    VertexSet slow = toll_interval_oracle(p.graph, u, v, OracleLimits{16});
    CHECK(fast == slow);
}
