#include "tollcvx/invariants.hpp"

#include <stdexcept>

#include "doctest.h"
#include "tollcvx/enumerate.hpp"
#include "tollcvx/io.hpp"

using namespace tollcvx;

TEST_CASE("is_toll_set") {
    Graph c5 = named::cycle(5);
    CHECK(is_toll_set(c5, VertexSet::full(5)));
    CHECK(is_toll_set(c5, VertexSet(5, {0, 2})));
    CHECK(!is_toll_set(named::complete(3), VertexSet(3, {0, 1})));
}

TEST_CASE("toll numbers of the named families") {
    for (int n = 2; n <= 6; ++n) CHECK(toll_number(named::complete(n)).value == n);
    for (int m = 4; m <= 8; ++m) CHECK(toll_number(named::cycle(m)).value == 2);
    CHECK(toll_number(named::fig3_spider()).value == 2);
    CHECK(toll_number(named::fig3_gprime()).value == 2);
    CHECK(toll_number(named::star(3)).value == 3);
    CHECK(toll_number(Graph(1)).value == 1);
}

TEST_CASE("t-hull numbers") {
    for (int n = 2; n <= 5; ++n) CHECK(t_hull_number(named::complete(n)).value == n);
    CHECK(t_hull_number(named::cycle(5)).value == 2);
    CHECK(t_hull_number(Graph(1)).value == 1);
}

TEST_CASE("geodetic numbers") {
    CHECK(geodetic_number(named::complete(3)).value == 3);
    CHECK(geodetic_number(named::cycle(4)).value == 2);
    CHECK(geodetic_number(named::cycle(5)).value == 3);
}

TEST_CASE("witnesses attain the value and pass the set predicate") {
    Graph g = named::fig3_spider();
    InvariantResult tn = toll_number(g);
    CHECK(tn.exhaustive);
    CHECK(!tn.witnesses.empty());
    for (const VertexSet& w : tn.witnesses) {
        CHECK(w.count() == tn.value);
        CHECK(is_toll_set(g, w));
    }
    InvariantResult th = t_hull_number(g);
    for (const VertexSet& w : th.witnesses) {
        CHECK(w.count() == th.value);
        CHECK(is_t_hull_set(g, w));
    }
    InvariantResult gn = geodetic_number(g);
    for (const VertexSet& w : gn.witnesses) {
        CHECK(w.count() == gn.value);
        CHECK(is_geodetic_set(g, w));
    }
}

TEST_CASE("witness cap marks the result non-exhaustive") {
    SearchOptions opt;
    opt.max_witnesses = 1;
    InvariantResult r = toll_number(named::cycle(5), opt);
    CHECK(r.value == 2);
    CHECK(r.witnesses.size() == 1);
    CHECK(!r.exhaustive);  // C5 has more than one minimum toll set
}

TEST_CASE("ceiling is enforced, disconnected rejected") {
    SearchOptions opt;
    opt.exact_ceiling = 4;
    CHECK_THROWS_AS(toll_number(named::cycle(5), opt), std::invalid_argument);
    CHECK_THROWS_AS(toll_number(Graph(3)), std::invalid_argument);
}

TEST_CASE("chain |Ext| <= th <= tn <= g holds exhaustively at n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            int ext = extreme_vertices(g).count();
            int th = t_hull_number(g).value;
            int tn = toll_number(g).value;
            int gn = geodetic_number(g).value;
            CHECK(ext <= th);
            CHECK(th <= tn);
            CHECK(tn <= gn);
        });
    }
}

TEST_CASE("pruned search agrees with the unpruned search, n <= 5") {
    SearchOptions plain;
    plain.force_extreme = false;
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            InvariantResult a = toll_number(g);
            InvariantResult b = toll_number(g, plain);
            CHECK(a.value == b.value);
            CHECK(a.witnesses == b.witnesses);
            CHECK(t_hull_number(g).value == t_hull_number(g, plain).value);
            CHECK(geodetic_number(g).value == geodetic_number(g, plain).value);
        });
    }
}

TEST_CASE("every minimum toll and hull set contains the extreme vertices, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            VertexSet ext = extreme_vertices(g);
            for (const VertexSet& w : toll_number(g).witnesses) CHECK(ext.is_subset_of(w));
            for (const VertexSet& w : t_hull_number(g).witnesses) CHECK(ext.is_subset_of(w));
        });
    }
}

TEST_CASE("2-packing") {
    CHECK(is_2_packing(named::path(5), VertexSet(5, {0, 4})));
    CHECK(is_2_packing(named::path(4), VertexSet(4, {0, 3})));
    CHECK(!is_2_packing(named::cycle(5), VertexSet(5, {0, 2})));

    // open variant: adjacent leaves of a path share no open neighbors
    Graph p2 = named::path(2);
    CHECK(open_neighborhoods_disjoint(p2, VertexSet(2, {0, 1})));
    CHECK(!is_2_packing(p2, VertexSet(2, {0, 1})));
}

TEST_CASE("extreme complete detection") {
    for (int n = 1; n <= 6; ++n) CHECK(is_extreme_complete(named::complete(n)));
    CHECK(!is_extreme_complete(named::cycle(5)));
    CHECK(!is_extreme_complete(named::fig3_spider()));
}

TEST_CASE("search for graphs with exactly one extreme vertex") {
    // none exist on 2..4 vertices, but 120 labeled ones appear at n = 5;
    // the smallest in edge-mask order has Ext = {4}
    for (int n = 2; n <= 4; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint64_t) {
            CHECK(extreme_vertices(g).count() != 1);
        });
    }
    int hits = 0;
    std::uint64_t first_mask = 0;
    enumerate_connected_graphs(5, [&](const Graph& g, std::uint64_t mask) {
        if (extreme_vertices(g).count() == 1 && hits++ == 0) first_mask = mask;
    });
    CHECK(hits == 120);
    CHECK(first_mask == 62);
    Graph witness = graph_from_edge_mask(5, first_mask);
    CHECK(extreme_vertices(witness) == VertexSet(5, {4}));
}
