#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtd/graph.hpp"
#include "rtd/rational.hpp"

namespace rtd {

// Finite vertex set with vertex weights w(v) and symmetric edge weights
// w(u,v), stored as a dense matrix. The container itself does not enforce
// the weighted-graph axioms so that validate() can diagnose bad input;
// use require_valid() where an operation needs them.
class WeightedGraph {
public:
  WeightedGraph() = default;
  // All edge weights start at 0.
  explicit WeightedGraph(std::vector<Rational> vertex_weights);

  std::size_t order() const { return vertex_weights_.size(); }
  const Rational &weight(Vertex v) const { return vertex_weights_[v]; }
  const Rational &weight(Vertex u, Vertex v) const { return edges_[u * order() + v]; }
  const std::vector<Rational> &vertex_weights() const { return vertex_weights_; }

  void set_vertex_weight(Vertex v, Rational w) { vertex_weights_.at(v) = std::move(w); }
  // Sets both (u,v) and (v,u).
  void set_edge(Vertex u, Vertex v, const Rational &w);
  // Sets only the (u,v) entry; for constructing deliberately malformed input.
  void set_entry(Vertex u, Vertex v, const Rational &w);

  WeightedGraph without(Vertex v) const;

  friend bool operator==(const WeightedGraph &, const WeightedGraph &) = default;

private:
  std::vector<Rational> vertex_weights_;
  std::vector<Rational> edges_;
};

struct ValidationIssue {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string message;
  std::vector<Vertex> vertices;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool valid() const;
  bool empty() const { return issues.empty(); }
  std::string summary() const;
};

ValidationReport validate(const WeightedGraph &g);
// Throws std::invalid_argument with the validation summary if g has errors.
void require_valid(const WeightedGraph &g);

// Spanning subgraph of edges with weight strictly greater than alpha.
SimpleGraph threshold_subgraph(const WeightedGraph &g, const Rational &alpha);

// Maps sigma: [s] -> V(g) enumerated by brute force beyond this count are refused.
inline constexpr std::size_t kMaxDensityMaps = 10'000'000;

// H-density over all maps sigma: V(H) -> V(g), including non-injective ones.
// Throws std::length_error if n^s exceeds kMaxDensityMaps.
Rational h_density(const WeightedGraph &g, const SimpleGraph &h);

// K_s-density via ordered injections (s! times the sum over s-subsets).
Rational ks_density(const WeightedGraph &g, std::size_t s);

enum class SubsetMode { containing, within, avoiding };

// K_s-density restricted to copies whose image contains S, lies within S, or
// avoids S. containing with |S| > s gives 0.
Rational ks_density_with(const WeightedGraph &g, std::size_t s, const VertexSubset &subset, SubsetMode mode);

enum class Keep { u, v };

// Deletes one endpoint of a weight-0 edge and gives its weight to the other.
// Throws std::invalid_argument unless u != v and w(u,v) = 0.
WeightedGraph merge_zero_edge(const WeightedGraph &g, Vertex u, Vertex v, Keep keep);

// Raises each edge weight to the next multiple of 1/2: (0,1/2] -> 1/2, (1/2,1] -> 1.
WeightedGraph round_up_to_halves(const WeightedGraph &g);

// Every pair of distinct vertices at the given weight; uniform vertex weights.
WeightedGraph uniform_complete(std::size_t n, const Rational &edge_weight);

} // namespace rtd
