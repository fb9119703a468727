#pragma once

#include <utility>
#include <vector>

#include "tollcvx/vertex_set.hpp"

namespace tollcvx {

/// Finite simple undirected graph on vertices 0..n-1.
/// Adjacency is kept as one VertexSet per vertex; symmetry and irreflexivity
/// are maintained by construction. Instances are treated as immutable once
/// built, so concurrent reads are safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    /// Throws std::invalid_argument on out-of-range indices or self-loops,
    /// naming the offending pair.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_vertex(int v) const { return 0 <= v && v < n_; }
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    void add_edge(int u, int v);

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.set(v);
        return s;
    }
    int degree(int v) const { return neighbors(v).count(); }

    /// Sorted list of edges with u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

/// Distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Reachability of t from s in g minus `removed`. Requires s,t outside removed.
bool reachable_avoiding(const Graph& g, int s, int t, const VertexSet& removed);

/// True iff every s,t-path meets `removed`. Preconditions: s != t and neither
/// endpoint inside removed (throws otherwise).
bool separates(const Graph& g, const VertexSet& removed, int s, int t);

/// Vertices whose removal disconnects g. Requires g connected, n >= 2.
VertexSet cut_vertices(const Graph& g);

/// Lexicographically least diametral pair; such a pair is non-adjacent and
/// free of cut vertices in every connected non-complete graph.
/// Throws on complete input.
std::pair<int, int> non_cut_non_adjacent_pair(const Graph& g);

struct VertexClasses {
    VertexSet simplicial;  // closed neighborhood induces a clique
    VertexSet universal;   // N[v] = V
};
VertexClasses vertex_classes(const Graph& g);

}  // namespace tollcvx
