#pragma once

// Independent reference implementations used by the tests. Everything here
// is deliberately naive: direct enumeration, no pruning, no shared code with
// the library beyond the data types.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rtd/rational.hpp"
#include "rtd/weighted_graph.hpp"

namespace oracle {

using rtd::Rational;
using rtd::WeightedGraph;

// Sum over all maps [s] -> V of prod w(sigma(i)) prod_{ij in E(H)} w(sigma(i), sigma(j)).
inline Rational all_maps_density(const WeightedGraph &g, int s, const std::vector<std::pair<int, int>> &h_edges) {
  const std::size_t n = g.order();
  Rational total(0);
  std::vector<std::size_t> sigma(static_cast<std::size_t>(s), 0);
  while (true) {
    Rational term(1);
    for (std::size_t v : sigma)
      term *= g.weight(v);
    for (auto [a, b] : h_edges)
      term *= g.weight(sigma[static_cast<std::size_t>(a)], sigma[static_cast<std::size_t>(b)]);
    total += term;
    std::size_t i = 0;
    while (i < sigma.size() && ++sigma[i] == n)
      sigma[i++] = 0;
    if (i == sigma.size())
      break;
  }
  return total;
}

inline std::vector<std::pair<int, int>> complete_edges(int s) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      e.emplace_back(i, j);
  return e;
}

// max |S1| + |S2| over every pair S2 ⊆ S1 ⊆ V by subset enumeration.
inline std::size_t brute_clique_score(const WeightedGraph &g) {
  const std::size_t n = g.order();
  const Rational zero(0), half(1, 2);
  auto clique_above = [&](std::uint32_t mask, const Rational &alpha) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !(g.weight(u, v) > alpha))
          return false;
    return true;
  };
  std::size_t best = 0;
  for (std::uint32_t s1 = 1; s1 < (1u << n); ++s1) {
    if (!clique_above(s1, zero))
      continue;
    // every nonempty submask
    for (std::uint32_t s2 = s1; s2 != 0; s2 = (s2 - 1) & s1)
      if (clique_above(s2, half))
        best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(s1) + __builtin_popcount(s2)));
  }
  return best;
}

// Positive integer weights normalized to sum 1.
inline std::vector<Rational> random_weights(std::mt19937_64 &rng, std::size_t n, int max_part = 9) {
  std::uniform_int_distribution<int> d(1, max_part);
  std::vector<long> k(n);
  long total = 0;
  for (auto &x : k)
    total += x = d(rng);
  std::vector<Rational> w;
  for (long x : k)
    w.emplace_back(x, total);
  return w;
}

// Edge weights drawn from {0, 1/2, 1} or, with fine=true, from multiples of 1/6.
inline WeightedGraph random_graph(std::mt19937_64 &rng, std::size_t n, bool fine = false) {
  WeightedGraph g(random_weights(rng, n));
  std::uniform_int_distribution<int> d(0, fine ? 6 : 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      g.set_edge(u, v, Rational(d(rng), fine ? 6 : 2));
  return g;
}

} // namespace oracle
