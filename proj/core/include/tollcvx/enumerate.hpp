#pragma once

#include <cstdint>
#include <functional>

#include "tollcvx/graph.hpp"

namespace tollcvx {

/// Default cap on exhaustive labeled enumeration (2^21 edge masks at n = 7).
inline constexpr int kEnumerationCeiling = 7;

/// Number of vertex pairs, i.e. bits in an edge mask.
int edge_bit_count(int n);

/// Pair ordering used by edge masks: (0,1),(0,2),...,(0,n-1),(1,2),...
int edge_bit_index(int n, int u, int v);

Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// All labeled connected graphs on n vertices, exactly once each, in
/// ascending edge-mask order. The mask is passed along as a stable id.
void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&, std::uint64_t)>& fn,
                                int ceiling = kEnumerationCeiling);

std::uint64_t connected_graph_count(int n, int ceiling = kEnumerationCeiling);

}  // namespace tollcvx
