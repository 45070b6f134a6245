#include "rtd/ckt.hpp"

#include <stdexcept>
#include <tuple>

#include "rtd/clique.hpp"

namespace rtd {

namespace {

bool is_clique(const SimpleGraph &g, const std::vector<Vertex> &vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j]))
        return false;
  return true;
}

} // namespace

bool is_weighted_clique(const WeightedGraph &g, const WeightedCliqueWitness &w) {
  if (w.s2.empty() || w.s1.size() < w.s2.size())
    return false;
  if (!w.s1.valid_for(g.order()))
    return false;
  for (Vertex v : w.s2.members())
    if (!w.s1.contains(v))
      return false;
  return is_clique(threshold_subgraph(g, Rational(0)), w.s1.members()) &&
         is_clique(threshold_subgraph(g, Rational(1, 2)), w.s2.members());
}

CliqueScore max_weighted_clique_score(const WeightedGraph &g) {
  if (g.order() == 0)
    throw std::domain_error("max_weighted_clique_score of an empty graph");
  const SimpleGraph positive = threshold_subgraph(g, Rational(0));
  const SimpleGraph heavy = threshold_subgraph(g, Rational(1, 2));

  CliqueScore best;
  bool have = false;
  for_each_maximal_clique(positive, [&](const std::vector<Vertex> &s1) {
    const SimpleGraph inner = heavy.induced(s1);
    std::vector<Vertex> s2;
    for (Vertex i : maximum_clique(inner))
      s2.push_back(s1[i]);
    WeightedCliqueWitness w{VertexSubset(s1), VertexSubset(std::move(s2))};
    const std::size_t score = w.score();
    if (!have || score > best.score ||
        (score == best.score && std::tie(w.s1, w.s2) < std::tie(best.witness.s1, best.witness.s2))) {
      best = {score, std::move(w)};
      have = true;
    }
  });
  return best;
}

WeightedCliqueWitness trim_witness(const WeightedCliqueWitness &w, std::size_t t) {
  if (t < 2 || w.score() < t)
    throw std::invalid_argument("cannot trim a witness of score " + std::to_string(w.score()) + " to " + std::to_string(t));
  std::vector<Vertex> s1 = w.s1.members();
  std::vector<Vertex> s2 = w.s2.members();
  std::size_t excess = w.score() - t;
  while (excess > 0 && s2.size() > 1) {
    s2.pop_back();
    --excess;
  }
  for (std::size_t i = s1.size(); excess > 0 && i-- > 0;) {
    if (!VertexSubset(s2).contains(s1[i])) {
      s1.erase(s1.begin() + static_cast<long>(i));
      --excess;
    }
  }
  // |S1| = |S2| = 1 already has score 2 <= t, so excess is now 0.
  return {VertexSubset(std::move(s1)), VertexSubset(std::move(s2))};
}

FreenessResult is_ckt_free(const WeightedGraph &g, std::size_t t) {
  if (t < 2)
    throw std::domain_error("t must be at least 2");
  FreenessResult out;
  if (g.order() == 0)
    return out;
  const CliqueScore best = max_weighted_clique_score(g);
  out.free = best.score < t;
  if (!out.free) {
    out.witness = best.witness;
    out.trimmed = trim_witness(best.witness, t);
  }
  return out;
}

} // namespace rtd
