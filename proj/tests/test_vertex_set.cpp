#include "tollcvx/vertex_set.hpp"

#include <random>
#include <set>

#include "doctest.h"

using tollcvx::VertexSet;

TEST_CASE("basic set algebra") {
    VertexSet a(10, {1, 3, 7});
    VertexSet b(10, {3, 4});

    CHECK(a.count() == 3);
    CHECK(a.test(3));
    CHECK(!a.test(2));
    CHECK((a | b) == VertexSet(10, {1, 3, 4, 7}));
    CHECK((a & b) == VertexSet(10, {3}));
    CHECK((a - b) == VertexSet(10, {1, 7}));
    CHECK(a.intersects(b));
    CHECK(!VertexSet(10, {0}).intersects(b));
    CHECK(VertexSet(10, {3}).is_subset_of(a));
    CHECK(!a.is_subset_of(b));
}

TEST_CASE("complement respects the universe") {
    VertexSet a(70, {0, 69});
    VertexSet c = a.complement();
    CHECK(c.count() == 68);
    CHECK(!c.test(0));
    CHECK(!c.test(69));
    CHECK(c.test(68));
    CHECK((a | c) == VertexSet::full(70));
}

TEST_CASE("iteration and ordering") {
    VertexSet a(100, {5, 64, 99});
    CHECK(a.to_vector() == std::vector<int>{5, 64, 99});
    CHECK(a.first() == 5);
    CHECK(a.next(5) == 64);
    CHECK(a.next(99) == -1);
    CHECK(a.to_string() == "{5,64,99}");

    CHECK(VertexSet(10, {0, 2}) < VertexSet(10, {0, 3}));
    CHECK(VertexSet(10, {0}) < VertexSet(10, {0, 1}));
    CHECK(!(VertexSet(10, {1}) < VertexSet(10, {0, 5})));
}

TEST_CASE("random operations agree with std::set") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 130);
        VertexSet a(n), b(n);
        std::set<int> sa, sb;
        for (int i = 0; i < n / 2; ++i) {
            int x = static_cast<int>(rng() % n);
            int y = static_cast<int>(rng() % n);
            a.set(x);
            sa.insert(x);
            b.set(y);
            sb.insert(y);
        }
        std::set<int> su = sa, si, sd;
        su.insert(sb.begin(), sb.end());
        for (int x : sa)
            if (sb.count(x)) si.insert(x);
        for (int x : sa)
            if (!sb.count(x)) sd.insert(x);
        CHECK((a | b).to_vector() == std::vector<int>(su.begin(), su.end()));
        CHECK((a & b).to_vector() == std::vector<int>(si.begin(), si.end()));
        CHECK((a - b).to_vector() == std::vector<int>(sd.begin(), sd.end()));
        CHECK(a.count() == static_cast<int>(sa.size()));
    }
}
