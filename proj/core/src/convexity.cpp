#include "tollcvx/convexity.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tollcvx {

namespace {

void require_vertices(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw std::invalid_argument("interval endpoints out of range");
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("operation requires a connected graph");
}

}  // namespace

VertexSet toll_interval(const Graph& g, int u, int v) {
    require_vertices(g, u, v);
    require_connected(g);
    int n = g.vertex_count();
    if (u == v) return VertexSet(n, {u});
    if (g.has_edge(u, v)) return VertexSet(n, {u, v});

    VertexSet result(n, {u, v});
    VertexSet closed_u = g.closed_neighborhood(u);
    VertexSet closed_v = g.closed_neighborhood(v);
    for (int x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        VertexSet ru = closed_u;
        ru.reset(x);
        VertexSet rv = closed_v;
        rv.reset(x);
        // x is on a tolled walk iff N[u]-{x} leaves x connected to v and
        // N[v]-{x} leaves x connected to u.
        if (reachable_avoiding(g, x, v, ru) && reachable_avoiding(g, x, u, rv)) result.set(x);
    }
    return result;
}

// --- walk-enumeration oracle -------------------------------------------------
//
// Enumerates tolled u,v-walks literally: the first vertex is a neighbor of u,
// later vertices never touch N(u), and a vertex of N(v) closes the walk
// immediately. Walk length is capped at 2n-2 edges; any witnessed vertex has
// a witness of that length (two simple segments), so the cap does not change
// the computed set. Two prunes keep the search tractable and lose nothing:
// a branch is dropped when no completion fits the remaining budget, or when
// everything it could still visit is already marked.

namespace {

struct OracleSearch {
    const Graph& g;
    int n;
    VertexSet nu, nv;     // open neighborhoods of the endpoints
    VertexSet mid;        // vertices allowed strictly inside: V - N(u) - N(v) - {u,v}
    VertexSet cont;       // continuation universe: mid | (N(v) - N(u))
    std::vector<int> dist_to_close;   // edges from x to some closing vertex via mid
    std::vector<VertexSet> fwd;       // over-approx of vertices any continuation can visit
    int budget;           // max edges per walk
    VertexSet marked;
    std::vector<int> stack;
    int unmarked_on_stack = 0;
    int u, v;

    OracleSearch(const Graph& graph, int uu, int vv)
        : g(graph), n(graph.vertex_count()), nu(graph.neighbors(uu)), nv(graph.neighbors(vv)),
          mid(n), cont(n), budget(2 * graph.vertex_count() - 2), marked(n), u(uu), v(vv) {
        mid = VertexSet::full(n) - nu - nv;
        mid.reset(u);
        mid.reset(v);
        cont = mid | (nv - nu);

        // reverse BFS from the closing vertices through mid
        dist_to_close.assign(static_cast<std::size_t>(n), -1);
        VertexSet frontier = nv - nu;
        for (int x : frontier) dist_to_close[static_cast<std::size_t>(x)] = 0;
        int d = 0;
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            ++d;
            VertexSet next(n);
            for (int x : frontier) next |= g.neighbors(x);
            next &= mid | nu;
            next -= seen;
            for (int x : next) dist_to_close[static_cast<std::size_t>(x)] = d;
            seen |= next;
            frontier = next & mid;  // walks may pass through mid only
        }

        fwd.assign(static_cast<std::size_t>(n), VertexSet(n));
        for (int x = 0; x < n; ++x) {
            if (!mid.test(x) && !nu.test(x)) continue;
            VertexSet reach(n);
            reach.set(x);
            VertexSet fr = reach;
            while (!fr.empty()) {
                VertexSet nx(n);
                for (int y : fr) nx |= g.neighbors(y);
                nx &= cont;
                nx -= reach;
                reach |= nx;
                fr = nx & mid;  // closing vertices are terminal
            }
            fwd[static_cast<std::size_t>(x)] = reach;
        }
    }

    void mark(int x) {
        if (!marked.test(x)) {
            marked.set(x);
        }
    }

    void push(int x) {
        if (!marked.test(x)) ++unmarked_on_stack;
        stack.push_back(x);
    }

    void pop() {
        // recount lazily: completions mark the whole stack
        int x = stack.back();
        stack.pop_back();
        if (!marked.test(x) && unmarked_on_stack > 0) --unmarked_on_stack;
    }

    void complete() {
        mark(u);
        mark(v);
        for (int x : stack) mark(x);
        unmarked_on_stack = 0;
    }

    // x = current walk vertex, edges = edges used so far (u -> ... -> x)
    void dfs(int x, int edges) {
        if (nv.test(x)) {  // a neighbor of v must close the walk
            if (edges + 1 <= budget) complete();
            return;
        }
        for (int y : g.neighbors(x)) {
            if (!cont.test(y)) continue;
            int close = dist_to_close[static_cast<std::size_t>(y)];
            if (close < 0 || edges + 1 + close + 1 > budget) continue;
            if (unmarked_on_stack == 0 && fwd[static_cast<std::size_t>(y)].is_subset_of(marked))
                continue;  // nothing new could be marked down this branch
            push(y);
            dfs(y, edges + 1);
            pop();
        }
    }

    VertexSet run() {
        for (int w1 : nu) {
            if (nv.test(w1)) {  // walk u, w1, v
                mark(u);
                mark(v);
                mark(w1);
                continue;
            }
            int close = dist_to_close[static_cast<std::size_t>(w1)];
            if (close < 0 || 1 + close + 1 > budget) continue;
            if (!marked.test(w1) || !fwd[static_cast<std::size_t>(w1)].is_subset_of(marked)) {
                push(w1);
                dfs(w1, 1);
                pop();
            }
        }
        return marked;
    }
};

}  // namespace

VertexSet toll_interval_oracle(const Graph& g, int u, int v, const OracleLimits& limits) {
    require_vertices(g, u, v);
    int n = g.vertex_count();
    if (n > limits.max_vertices)
        throw std::invalid_argument("oracle ceiling exceeded: n=" + std::to_string(n) +
                                    " > " + std::to_string(limits.max_vertices));
    require_connected(g);
    if (u == v) return VertexSet(n, {u});
    if (g.has_edge(u, v)) return VertexSet(n, {u, v});
    return OracleSearch(g, u, v).run();
}

VertexSet geodesic_interval(const Graph& g, int u, int v) {
    require_vertices(g, u, v);
    require_connected(g);
    int n = g.vertex_count();
    std::vector<int> du = bfs_distances(g, u);
    std::vector<int> dv = bfs_distances(g, v);
    int d = du[static_cast<std::size_t>(v)];
    VertexSet result(n);
    for (int x = 0; x < n; ++x)
        if (du[static_cast<std::size_t>(x)] + dv[static_cast<std::size_t>(x)] == d) result.set(x);
    return result;
}

VertexSet interval(const Graph& g, int u, int v, IntervalKind kind) {
    return kind == IntervalKind::toll ? toll_interval(g, u, v) : geodesic_interval(g, u, v);
}

IntervalTable::IntervalTable(const Graph& g, IntervalKind kind) : n_(g.vertex_count()) {
    require_connected(g);
    table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), VertexSet(n_));
    if (kind == IntervalKind::geodesic) {
        std::vector<std::vector<int>> dist(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) dist[static_cast<std::size_t>(v)] = bfs_distances(g, v);
        for (int u = 0; u < n_; ++u) {
            for (int v = u; v < n_; ++v) {
                VertexSet& s = table_[static_cast<std::size_t>(u) * n_ + v];
                int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                for (int x = 0; x < n_; ++x)
                    if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] +
                            dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] == d)
                        s.set(x);
            }
        }
        return;
    }
    for (int u = 0; u < n_; ++u)
        for (int v = u; v < n_; ++v)
            table_[static_cast<std::size_t>(u) * n_ + v] = toll_interval(g, u, v);
}

VertexSet closure_from_table(const IntervalTable& table, const VertexSet& s) {
    VertexSet out = s;
    for (int u = s.first(); u != -1; u = s.next(u))
        for (int v = s.next(u); v != -1; v = s.next(v)) out |= table.at(u, v);
    return out;
}

VertexSet toll_closure(const Graph& g, const VertexSet& s) {
    require_connected(g);
    VertexSet out = s;
    for (int u = s.first(); u != -1; u = s.next(u))
        for (int v = s.next(u); v != -1; v = s.next(v)) out |= toll_interval(g, u, v);
    return out;
}

namespace {

template <typename Closure>
HullTrace hull_impl(const VertexSet& s, Closure&& step) {
    HullTrace trace;
    trace.stages.push_back(s);
    for (;;) {
        VertexSet next = step(trace.stages.back());
        if (next == trace.stages.back()) return trace;
        trace.stages.push_back(std::move(next));
    }
}

}  // namespace

HullTrace t_convex_hull(const Graph& g, const VertexSet& s) {
    require_connected(g);
    return hull_impl(s, [&](const VertexSet& cur) { return toll_closure(g, cur); });
}

HullTrace hull_from_table(const IntervalTable& table, const VertexSet& s) {
    return hull_impl(s, [&](const VertexSet& cur) { return closure_from_table(table, cur); });
}

bool is_t_convex(const Graph& g, const VertexSet& y, ConvexityMethod method) {
    require_connected(g);
    if (method == ConvexityMethod::closure) return toll_closure(g, y) == y;

    // Separator form: for every x,y in Y and v outside Y, N[x]-{v} separates
    // v from y or N[y]-{v} separates v from x. A pair counts as separated
    // when the target already lies inside the removed set.
    int n = g.vertex_count();
    VertexSet outside = VertexSet::full(n) - y;
    for (int a = y.first(); a != -1; a = y.next(a)) {
        for (int b = a; b != -1; b = y.next(b)) {
            for (int v : outside) {
                VertexSet ra = g.closed_neighborhood(a);
                ra.reset(v);
                VertexSet rb = g.closed_neighborhood(b);
                rb.reset(v);
                bool sep_a = ra.test(b) || !reachable_avoiding(g, v, b, ra);
                bool sep_b = rb.test(a) || !reachable_avoiding(g, v, a, rb);
                if (!sep_a && !sep_b) return false;
            }
        }
    }
    return true;
}

VertexSet extreme_vertices_from_table(const IntervalTable& table) {
    int n = table.vertex_count();
    // s is extreme iff it is interior to no interval between other vertices
    VertexSet interior(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet t = table.at(u, v);
            t.reset(u);
            t.reset(v);
            interior |= t;
        }
    }
    return interior.complement();
}

VertexSet extreme_vertices(const Graph& g) {
    return extreme_vertices_from_table(IntervalTable(g, IntervalKind::toll));
}

}  // namespace tollcvx
