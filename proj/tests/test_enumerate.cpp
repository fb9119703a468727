#include "tollcvx/enumerate.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace tollcvx;

TEST_CASE("connected graph counts at small n") {
    CHECK(connected_graph_count(1) == 1);
    CHECK(connected_graph_count(2) == 1);
    CHECK(connected_graph_count(3) == 4);
    CHECK(connected_graph_count(4) == 38);
    CHECK(connected_graph_count(5) == 728);
}

TEST_CASE("enumeration order is edge-mask ascending and deterministic") {
    std::vector<std::uint64_t> masks;
    enumerate_connected_graphs(3, [&](const Graph& g, std::uint64_t mask) {
        CHECK(is_connected(g));
        masks.push_back(mask);
    });
    CHECK(masks == std::vector<std::uint64_t>{3, 5, 6, 7});
}

TEST_CASE("ceiling is enforced") {
    CHECK_THROWS_AS(enumerate_connected_graphs(8, [](const Graph&, std::uint64_t) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected_graphs(0, [](const Graph&, std::uint64_t) {}),
                    std::invalid_argument);
}

TEST_CASE("edge bit indexing round-trips") {
    int n = 6;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) CHECK(edge_bit_index(n, u, v) == bit++);
    CHECK(bit == edge_bit_count(n));

    Graph g = graph_from_edge_mask(4, 0b1 | 0b1000);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.edge_count() == 2);
}
