#pragma once

#include <vector>

#include "tollcvx/graph.hpp"

namespace tollcvx {

/// Toll interval T(u,v): all vertices on some tolled u,v-walk. Computed by
/// two reachability tests per candidate x (x qualifies iff N[u]-{x} does not
/// separate x from v and N[v]-{x} does not separate x from u), which keeps
/// the main path polynomial. Requires g connected.
VertexSet toll_interval(const Graph& g, int u, int v);

struct OracleLimits {
    int max_vertices = 8;
};

/// Independent witness-search computation of T(u,v): enumerates tolled walks
/// explicitly, bounded at 2n-2 edges, and collects every vertex that appears
/// on an accepting walk. Exponential in principle; kept out of the main path
/// and guarded by a vertex ceiling.
VertexSet toll_interval_oracle(const Graph& g, int u, int v, const OracleLimits& limits = {});

/// Geodesic interval I(u,v): vertices with d(u,x) + d(x,v) = d(u,v).
VertexSet geodesic_interval(const Graph& g, int u, int v);

enum class IntervalKind { toll, geodesic };

VertexSet interval(const Graph& g, int u, int v, IntervalKind kind);

/// All-pairs interval cache; the workhorse behind closures, hulls and
/// minimum-set searches.
class IntervalTable {
public:
    IntervalTable(const Graph& g, IntervalKind kind = IntervalKind::toll);

    int vertex_count() const { return n_; }
    const VertexSet& at(int u, int v) const {
        if (u > v) std::swap(u, v);
        return table_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }

private:
    int n_;
    std::vector<VertexSet> table_;
};

/// Union of intervals over all pairs from s (including u = v), so always a
/// superset of s.
VertexSet toll_closure(const Graph& g, const VertexSet& s);
VertexSet closure_from_table(const IntervalTable& table, const VertexSet& s);

/// Iterated toll closure up to the fixpoint. stages.front() = s,
/// stages increase strictly, stages.back() is the hull.
struct HullTrace {
    std::vector<VertexSet> stages;
    const VertexSet& fixed() const { return stages.back(); }
};

HullTrace t_convex_hull(const Graph& g, const VertexSet& s);
HullTrace hull_from_table(const IntervalTable& table, const VertexSet& s);

enum class ConvexityMethod { closure, separator };

/// t-convexity test. The closure method checks toll_closure(y) == y; the
/// separator method checks, for every x,y in Y and v outside Y, that
/// N[x]-{v} separates v from y or N[y]-{v} separates v from x (a pair is
/// counted as separated when the target already lies inside the removed set).
bool is_t_convex(const Graph& g, const VertexSet& y,
                 ConvexityMethod method = ConvexityMethod::closure);

/// Vertices s with V-{s} t-convex; always simplicial.
VertexSet extreme_vertices(const Graph& g);
VertexSet extreme_vertices_from_table(const IntervalTable& table);

}  // namespace tollcvx
