#include <doctest.h>

#include <random>

#include "rtd/clique.hpp"

using namespace rtd;

namespace {

SimpleGraph turan_2_4() {
  SimpleGraph g(4);
  for (Vertex u : {0, 1})
    for (Vertex v : {2, 3})
      g.add_edge(u, v);
  return g;
}

std::size_t brute_omega(const SimpleGraph &g) {
  std::size_t best = 0;
  const std::size_t n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) {
          ok = false;
          break;
        }
    if (ok)
      best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

} // namespace

TEST_CASE("clique number of small graphs") {
  CHECK(clique_number(SimpleGraph::complete(5)) == 5);
  CHECK(clique_number(SimpleGraph::cycle(5)) == 2);
  CHECK(clique_number(turan_2_4()) == 2);
  CHECK(clique_number(SimpleGraph(0)) == 0);
  CHECK(clique_number(SimpleGraph(3)) == 1);
}

TEST_CASE("clique search agrees with subset enumeration") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = 1 + rng() % 11;
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 100 < 60)
          g.add_edge(u, v);
    const auto k = maximum_clique(g);
    CHECK(k.size() == brute_omega(g));
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = i + 1; j < k.size(); ++j)
        CHECK(g.adjacent(k[i], k[j]));
    CHECK(has_clique_of_size(g, k.size()));
    CHECK_FALSE(has_clique_of_size(g, k.size() + 1));
  }
}

TEST_CASE("maximal cliques of a 5-cycle are its edges") {
  std::vector<std::vector<Vertex>> seen;
  for_each_maximal_clique(SimpleGraph::cycle(5), [&](const std::vector<Vertex> &c) { seen.push_back(c); });
  CHECK(seen.size() == 5);
  for (const auto &c : seen)
    CHECK(c.size() == 2);
}

TEST_CASE("greedy independence bounds bracket the truth") {
  const SimpleGraph c5 = SimpleGraph::cycle(5);
  const auto ind = greedy_independent_set(c5);
  const auto cover = greedy_clique_cover(c5);
  const std::size_t alpha = clique_number(c5.complement());
  CHECK(alpha == 2);
  CHECK(ind.size() <= alpha);
  CHECK(cover.size() >= alpha);
  for (std::size_t i = 0; i < ind.size(); ++i)
    for (std::size_t j = i + 1; j < ind.size(); ++j)
      CHECK_FALSE(c5.adjacent(ind[i], ind[j]));
}

TEST_CASE("simple graph basics") {
  SimpleGraph g(3);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS(g.add_edge(1, 1));
  const std::vector<Vertex> keep{0, 2};
  CHECK(g.induced(keep).edge_count() == 1);
  CHECK(g.complement().edge_count() == 2);
  const VertexSubset s{3, 1, 3};
  CHECK(s.members() == std::vector<Vertex>{1, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.valid_for(3));
}
