#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tollcvx/convexity.hpp"
#include "tollcvx/graph.hpp"

namespace tollcvx {

struct SearchOptions {
    /// Exact searches refuse graphs above this size instead of approximating.
    int exact_ceiling = 12;
    /// Cap on collected minimum sets; default keeps all of them.
    std::size_t max_witnesses = std::numeric_limits<std::size_t>::max();
    /// Force extreme vertices into every candidate (they lie in every toll
    /// set and every t-hull set). Disable only to cross-check the pruning.
    bool force_extreme = true;
};

struct InvariantResult {
    int value = 0;
    std::vector<VertexSet> witnesses;  // minimum sets in discovery (lexicographic) order
    bool exhaustive = true;            // false only when max_witnesses truncated the list
};

bool is_toll_set(const Graph& g, const VertexSet& s);
bool is_t_hull_set(const Graph& g, const VertexSet& s);
bool is_geodetic_set(const Graph& g, const VertexSet& s);

InvariantResult toll_number(const Graph& g, const SearchOptions& options = {});
InvariantResult t_hull_number(const Graph& g, const SearchOptions& options = {});
InvariantResult geodetic_number(const Graph& g, const SearchOptions& options = {});

/// Closed neighborhoods of distinct members pairwise disjoint.
bool is_2_packing(const Graph& g, const VertexSet& s);
/// Open-neighborhood variant of the same disjointness condition.
bool open_neighborhoods_disjoint(const Graph& g, const VertexSet& s);

/// |Ext(G)| == tn(G).
bool is_extreme_complete(const Graph& g, const SearchOptions& options = {});

}  // namespace tollcvx
