#include "tollcvx/graph.hpp"

#include <stdexcept>
#include <string>

namespace tollcvx {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") rejected");
        g.add_edge(u, v);
    }
    return g;
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v) || u == v)
        throw std::invalid_argument("invalid edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Frontier-expansion BFS restricted to `allowed`; returns everything reached
// from src (src must be allowed).
VertexSet reach_within(const Graph& g, int src, const VertexSet& allowed) {
    VertexSet reached(g.vertex_count());
    reached.set(src);
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next(g.vertex_count());
        for (int v : frontier) next |= g.neighbors(v);
        next &= allowed;
        next -= reached;
        reached |= next;
        frontier = next;
    }
    return reached;
}

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("connectivity undefined for the empty graph");
    return reach_within(g, 0, VertexSet::full(n)).count() == n;
}

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    VertexSet reached(n);
    reached.set(src);
    VertexSet frontier = reached;
    int d = 0;
    while (!frontier.empty()) {
        ++d;
        VertexSet next(n);
        for (int v : frontier) next |= g.neighbors(v);
        next -= reached;
        for (int v : next) dist[static_cast<std::size_t>(v)] = d;
        reached |= next;
        frontier = next;
    }
    return dist;
}

bool reachable_avoiding(const Graph& g, int s, int t, const VertexSet& removed) {
    if (s == t) return true;
    VertexSet allowed = removed.complement();
    return reach_within(g, s, allowed).test(t);
}

bool separates(const Graph& g, const VertexSet& removed, int s, int t) {
    if (!g.has_vertex(s) || !g.has_vertex(t))
        throw std::invalid_argument("separation endpoints out of range");
    if (s == t) throw std::invalid_argument("separation endpoints must differ");
    if (removed.test(s) || removed.test(t))
        throw std::invalid_argument("separation endpoint inside the removed set");
    return !reachable_avoiding(g, s, t, removed);
}

VertexSet cut_vertices(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("cut vertices need at least 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("cut vertices require a connected graph");
    VertexSet cuts(n);
    for (int v = 0; v < n; ++v) {
        VertexSet allowed = VertexSet::full(n);
        allowed.reset(v);
        int start = allowed.first();
        if (reach_within(g, start, allowed).count() != n - 1) cuts.set(v);
    }
    return cuts;
}

std::pair<int, int> non_cut_non_adjacent_pair(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2 || !is_connected(g))
        throw std::invalid_argument("non-cut pair requires a connected graph on >= 2 vertices");
    if (is_complete(g))
        throw std::invalid_argument("complete graph has no non-adjacent pair");
    int diam = 0;
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        dist[static_cast<std::size_t>(v)] = bfs_distances(g, v);
        for (int d : dist[static_cast<std::size_t>(v)])
            if (d > diam) diam = d;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == diam)
                return {u, v};
    throw std::logic_error("diametral pair not found");
}

VertexClasses vertex_classes(const Graph& g) {
    int n = g.vertex_count();
    VertexClasses out{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v) {
        VertexSet closed = g.closed_neighborhood(v);
        if (closed.count() == n) out.universal.set(v);
        bool simplicial = true;
        for (int u : g.neighbors(v)) {
            if (!closed.is_subset_of(g.closed_neighborhood(u))) {
                simplicial = false;
                break;
            }
        }
        if (simplicial) out.simplicial.set(v);
    }
    return out;
}

}  // namespace tollcvx
