#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rtd/graph.hpp"

namespace rtd {

// Exact maximum clique by branch and bound with a greedy colouring bound
// (bitset MCQ). Exponential in the worst case; practical for the graph sizes
// used here (tiny weighted graphs, realized graphs up to a few hundred
// vertices of low clique number). Returns vertices in increasing order;
// among maximum cliques the first found in lexicographic search order.
std::vector<Vertex> maximum_clique(const SimpleGraph &g);

// Size of the largest clique; 0 for the empty graph, 1 for nonempty edgeless graphs.
std::size_t clique_number(const SimpleGraph &g);

// Restricted to the given vertex subset.
std::size_t clique_number(const SimpleGraph &g, const std::vector<Vertex> &within);

// Bron-Kerbosch with Tomita pivoting. Each maximal clique is passed to the
// visitor as a sorted vertex list; enumeration order is deterministic.
void for_each_maximal_clique(const SimpleGraph &g,
                             const std::function<void(const std::vector<Vertex> &)> &visit);

bool has_clique_of_size(const SimpleGraph &g, std::size_t k);

// Greedy maximal independent set (minimum-degree first); a lower bound on alpha.
std::vector<Vertex> greedy_independent_set(const SimpleGraph &g);

// Greedy partition of V into cliques; its size is an upper bound on alpha.
std::vector<std::vector<Vertex>> greedy_clique_cover(const SimpleGraph &g);

} // namespace rtd
