#pragma once

#include <cstddef>
#include <optional>

#include "rtd/graph.hpp"
#include "rtd/weighted_graph.hpp"

namespace rtd {

// A pair S2 ⊆ S1 with S1 a clique of R_{>0} and S2 a clique of R_{>1/2}.
struct WeightedCliqueWitness {
  VertexSubset s1;
  VertexSubset s2;

  std::size_t score() const { return s1.size() + s2.size(); }
  friend bool operator==(const WeightedCliqueWitness &, const WeightedCliqueWitness &) = default;
};

// True iff the pair satisfies the witness conditions in g.
bool is_weighted_clique(const WeightedGraph &g, const WeightedCliqueWitness &w);

struct CliqueScore {
  std::size_t score = 0;
  WeightedCliqueWitness witness;
};

// max |S1| + |S2| over valid pairs. Only maximal cliques of R_{>0} need to be
// examined since the score never drops when S1 grows. Ties resolve to the
// lexicographically least (S1, S2). Throws std::domain_error on an empty graph.
CliqueScore max_weighted_clique_score(const WeightedGraph &g);

struct FreenessResult {
  bool free = true;
  std::optional<WeightedCliqueWitness> witness; // maximum-score pair
  std::optional<WeightedCliqueWitness> trimmed; // sub-pair with score exactly t
};

// g is K_t-free (in the weighted sense) iff its maximum score is below t.
// Throws std::domain_error for t < 2.
FreenessResult is_ckt_free(const WeightedGraph &g, std::size_t t);

// Shrinks a witness to score exactly t by dropping the largest indices of S2
// first (keeping |S2| >= 1), then vertices of S1 \ S2.
WeightedCliqueWitness trim_witness(const WeightedCliqueWitness &w, std::size_t t);

} // namespace rtd
