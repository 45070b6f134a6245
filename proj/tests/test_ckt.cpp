#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rtd/ckt.hpp"
#include "rtd/partition.hpp"

using namespace rtd;

TEST_CASE("maximum weighted clique score") {
  const auto k5 = max_weighted_clique_score(complete_balanced(5));
  CHECK(k5.score == 10);
  CHECK(k5.witness.s1 == VertexSubset{0, 1, 2, 3, 4});
  CHECK(k5.witness.s2 == VertexSubset{0, 1, 2, 3, 4});

  const WeightedGraph tri = uniform_complete(3, Rational(1, 2));
  const auto t = max_weighted_clique_score(tri);
  CHECK(t.score == 4);
  CHECK(t.witness.s1.size() == 3);
  CHECK(t.witness.s2.size() == 1);
  CHECK(is_weighted_clique(tri, t.witness));

  CHECK(max_weighted_clique_score(complete_balanced(1)).score == 2);
  CHECK_THROWS_AS(max_weighted_clique_score(WeightedGraph()), std::domain_error);
}

TEST_CASE("freeness decisions and witnesses") {
  const WeightedGraph k5 = complete_balanced(5);
  CHECK(is_ckt_free(k5, 11).free);
  const auto r = is_ckt_free(k5, 10);
  CHECK_FALSE(r.free);
  REQUIRE(r.witness);
  CHECK(r.witness->score() == 10);
  REQUIRE(r.trimmed);
  CHECK(r.trimmed->score() == 10);

  WeightedGraph tri = uniform_complete(3, Rational(1, 2));
  tri.set_edge(0, 1, Rational(1));
  const auto r2 = is_ckt_free(tri, 5);
  CHECK_FALSE(r2.free);
  CHECK(r2.witness->s1 == VertexSubset{0, 1, 2});
  CHECK(r2.witness->s2 == VertexSubset{0, 1});
  CHECK_THROWS_AS(is_ckt_free(k5, 1), std::domain_error);
}

TEST_CASE("trimmed witnesses have the exact score and stay valid") {
  const WeightedGraph k5 = complete_balanced(5);
  const auto r = is_ckt_free(k5, 7);
  REQUIRE(r.trimmed);
  CHECK(r.trimmed->score() == 7);
  CHECK(r.trimmed->s1 == VertexSubset{0, 1, 2, 3, 4});
  CHECK(r.trimmed->s2 == VertexSubset{0, 1});
  CHECK(is_weighted_clique(k5, *r.trimmed));
  const auto r3 = is_ckt_free(k5, 3);
  CHECK(r3.trimmed->score() == 3);
  CHECK(is_weighted_clique(k5, *r3.trimmed));
}

TEST_CASE("freeness agrees with pair enumeration for n <= 7") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 150; ++it) {
    const std::size_t n = 1 + rng() % 7;
    const WeightedGraph g = oracle::random_graph(rng, n, it % 3 == 0);
    const std::size_t brute = oracle::brute_clique_score(g);
    const auto best = max_weighted_clique_score(g);
    CHECK(best.score == brute);
    CHECK(is_weighted_clique(g, best.witness));
    for (std::size_t t = 2; t <= 2 * n + 1; ++t) {
      const auto r = is_ckt_free(g, t);
      CHECK(r.free == (brute < t));
      if (!r.free) {
        CHECK(r.trimmed->score() == t);
        CHECK(is_weighted_clique(g, *r.trimmed));
      }
    }
  }
}

TEST_CASE("freeness is monotone in t") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 50; ++it) {
    const WeightedGraph g = oracle::random_graph(rng, 1 + rng() % 6);
    for (std::size_t t = 2; t < 14; ++t)
      if (is_ckt_free(g, t).free)
        CHECK(is_ckt_free(g, t + 1).free);
  }
}

TEST_CASE("rounding up to halves preserves the score") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 80; ++it) {
    const WeightedGraph g = oracle::random_graph(rng, 1 + rng() % 6, true);
    CHECK(max_weighted_clique_score(round_up_to_halves(g)).score == max_weighted_clique_score(g).score);
  }
}

TEST_CASE("partition graphs score a + b") {
  for (int t = 5; t <= 12; ++t)
    for (const auto &spec : enumerate_specs(3, t)) {
      WeightAssignment w;
      for (int size : spec.part_sizes)
        w[size] = Rational(1, spec.b);
      CHECK(max_weighted_clique_score(realize_spec(spec, w)).score == static_cast<std::size_t>(spec.a + spec.b));
    }
}
