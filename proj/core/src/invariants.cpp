#include "tollcvx/invariants.hpp"

#include <stdexcept>
#include <string>

namespace tollcvx {

namespace {

enum class CoverMode { closure, hull, geodetic };

bool covers(const IntervalTable& table, CoverMode mode, const VertexSet& s, const VertexSet& all) {
    switch (mode) {
        case CoverMode::closure:
        case CoverMode::geodetic:
            return closure_from_table(table, s) == all;
        case CoverMode::hull:
            return hull_from_table(table, s).fixed() == all;
    }
    return false;
}

// Cardinality-ascending search over candidates forced ∪ (k-|forced|)-subsets
// of V - forced, subsets visited in lexicographic order. Extreme vertices lie
// in every toll set and every t-hull set (and every geodetic set, each being
// a toll set), which justifies the forcing.
InvariantResult minimum_set(const Graph& g, IntervalKind kind, CoverMode mode,
                            const SearchOptions& opt) {
    int n = g.vertex_count();
    if (n > opt.exact_ceiling)
        throw std::invalid_argument("exact search ceiling exceeded: n=" + std::to_string(n) +
                                    " > " + std::to_string(opt.exact_ceiling));
    if (!is_connected(g))
        throw std::invalid_argument("invariant search requires a connected graph");

    IntervalTable table(g, kind);
    VertexSet all = VertexSet::full(n);
    VertexSet forced(n);
    if (opt.force_extreme) {
        forced = kind == IntervalKind::toll
                     ? extreme_vertices_from_table(table)
                     : extreme_vertices(g);
    }
    std::vector<int> pool = (all - forced).to_vector();
    int f = forced.count();

    // a singleton closure is the singleton, so n >= 2 needs at least 2
    int start = f;
    if (start < (n == 1 ? 1 : 2)) start = n == 1 ? 1 : 2;

    InvariantResult result;
    for (int k = start; k <= n; ++k) {
        int pick = k - f;
        if (pick < 0 || pick > static_cast<int>(pool.size())) continue;
        std::vector<int> idx(static_cast<std::size_t>(pick));
        for (int i = 0; i < pick; ++i) idx[static_cast<std::size_t>(i)] = i;
        bool more = pick >= 0;
        while (more) {
            VertexSet s = forced;
            for (int i : idx) s.set(pool[static_cast<std::size_t>(i)]);
            if (covers(table, mode, s, all)) {
                if (result.witnesses.size() < opt.max_witnesses) {
                    result.witnesses.push_back(s);
                } else {
                    result.exhaustive = false;
                    break;
                }
            }
            // next lexicographic combination
            int i = pick - 1;
            while (i >= 0 &&
                   idx[static_cast<std::size_t>(i)] ==
                       static_cast<int>(pool.size()) - pick + i)
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < pick; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (!result.witnesses.empty()) {
            result.value = k;
            return result;
        }
    }
    throw std::logic_error("minimum set search failed to terminate");
}

}  // namespace

bool is_toll_set(const Graph& g, const VertexSet& s) {
    return toll_closure(g, s) == VertexSet::full(g.vertex_count());
}

bool is_t_hull_set(const Graph& g, const VertexSet& s) {
    return t_convex_hull(g, s).fixed() == VertexSet::full(g.vertex_count());
}

bool is_geodetic_set(const Graph& g, const VertexSet& s) {
    if (!is_connected(g)) throw std::invalid_argument("geodetic test requires a connected graph");
    VertexSet out = s;
    for (int u = s.first(); u != -1; u = s.next(u))
        for (int v = s.next(u); v != -1; v = s.next(v)) out |= geodesic_interval(g, u, v);
    return out == VertexSet::full(g.vertex_count());
}

InvariantResult toll_number(const Graph& g, const SearchOptions& options) {
    return minimum_set(g, IntervalKind::toll, CoverMode::closure, options);
}

InvariantResult t_hull_number(const Graph& g, const SearchOptions& options) {
    return minimum_set(g, IntervalKind::toll, CoverMode::hull, options);
}

InvariantResult geodetic_number(const Graph& g, const SearchOptions& options) {
    return minimum_set(g, IntervalKind::geodesic, CoverMode::geodetic, options);
}

namespace {

bool neighborhoods_disjoint(const Graph& g, const VertexSet& s, bool closed) {
    for (int u = s.first(); u != -1; u = s.next(u)) {
        for (int v = s.next(u); v != -1; v = s.next(v)) {
            VertexSet a = closed ? g.closed_neighborhood(u) : g.neighbors(u);
            if (a.intersects(closed ? g.closed_neighborhood(v) : g.neighbors(v))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_2_packing(const Graph& g, const VertexSet& s) {
    return neighborhoods_disjoint(g, s, /*closed=*/true);
}

bool open_neighborhoods_disjoint(const Graph& g, const VertexSet& s) {
    return neighborhoods_disjoint(g, s, /*closed=*/false);
}

bool is_extreme_complete(const Graph& g, const SearchOptions& options) {
    return extreme_vertices(g).count() == toll_number(g, options).value;
}

}  // namespace tollcvx
