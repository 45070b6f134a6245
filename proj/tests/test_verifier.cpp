#include <doctest.h>

#include <random>

#include "rtd/ckt.hpp"
#include "rtd/optimizer.hpp"
#include "rtd/verifier.hpp"

using namespace rtd;

namespace {

SearchConfig config(int n, int d, int s, int t) {
  SearchConfig c;
  c.n = n;
  c.weight_denominator = d;
  c.s = s;
  c.t = t;
  return c;
}

} // namespace

TEST_CASE("brute-force extremal search") {
  const auto tri = brute_force_extremal(config(3, 6, 3, 5));
  CHECK(tri.density == Rational(1, 36));
  CHECK(tri.best == uniform_complete(3, Rational(1, 2)));
  CHECK(tri.maximizers.size() == 1);

  const auto edge = brute_force_extremal(config(2, 4, 2, 4));
  CHECK(edge.density == Rational(1, 4));
  CHECK(edge.best.weight(0, 1) == Rational(1, 2));
  CHECK(edge.best.weight(0) == Rational(1, 2));

  const auto k5 = brute_force_extremal(config(5, 5, 5, 11));
  CHECK(k5.density == Rational(24, 625));
  CHECK(k5.best == complete_balanced(5));
  CHECK(check_structure(k5.best, 5, 11).all_hold());
}

TEST_CASE("search results are free, exact and thread independent") {
  auto cfg = config(4, 8, 3, 6);
  cfg.edge_alphabet = {Rational(0), Rational(1, 2), Rational(1)};
  const auto a = brute_force_extremal(cfg);
  cfg.threads = 3;
  const auto b = brute_force_extremal(cfg);
  CHECK(a.density == b.density);
  REQUIRE(a.maximizers.size() == b.maximizers.size());
  for (std::size_t i = 0; i < a.maximizers.size(); ++i) {
    CHECK(a.maximizers[i] == b.maximizers[i]);
    CHECK(ks_density(a.maximizers[i], 3) == a.density);
    CHECK(is_ckt_free(a.maximizers[i], 6).free);
  }
  CHECK(a.density <= rho(3, 6).density);
}

TEST_CASE("search finds certified optima whose denominators divide D") {
  // rho(2,5) = 1/2 at K_2 with weights 1/2
  const auto r = brute_force_extremal(config(2, 4, 2, 5));
  CHECK(r.density == rho(2, 5).density);
  const auto r6 = brute_force_extremal(config(3, 7, 2, 6));
  CHECK(r6.density == rho(2, 6).density);
}

TEST_CASE("oversized searches are refused") {
  auto cfg = config(8, 0, 3, 5);
  CHECK(cfg.denominator() == 64);
  try {
    brute_force_extremal(cfg);
    FAIL("expected refusal");
  } catch (const SearchRefused &e) {
    CHECK(e.space() > 1e8);
  }
  CHECK_THROWS_AS(brute_force_extremal(config(3, 2, 3, 5)), std::domain_error);
  auto bad = config(3, 6, 3, 5);
  bad.edge_alphabet = {Rational(1, 3)};
  CHECK_THROWS_AS(brute_force_extremal(bad), std::domain_error);
}

TEST_CASE("structure checks") {
  const auto k5 = check_structure(complete_balanced(5), 5, 11);
  CHECK(k5.all_hold());
  CHECK(k5.a == 5);
  CHECK(k5.b == 5);
  REQUIRE(k5.partition);

  const PartitionSpec s64 = PartitionSpec::balanced(5, 11, 6);
  const auto ce = check_structure(realize_spec(s64, {{2, Rational(4, 25)}, {1, Rational(9, 50)}}), 5, 11);
  CHECK(ce.all_hold());
  CHECK(ce.a == 4);
  CHECK(ce.b == 6);
  REQUIRE(ce.partition);
  CHECK(*ce.partition == s64);

  WeightedGraph tri = uniform_complete(3, Rational(1, 2));
  tri.set_edge(0, 1, Rational(0));
  CHECK_FALSE(check_structure(tri, 3, 5).a1.holds);

  // heavier vertices in the larger part break A4
  const auto swapped = check_structure(realize_spec(s64, {{2, Rational(1, 5)}, {1, Rational(1, 10)}}), 5, 11);
  CHECK(swapped.a2.holds);
  CHECK_FALSE(swapped.a4.holds);
  // one part of size 4 with s = 5 and a = 2 breaks A5
  const auto s82 = check_structure(realize_spec(PartitionSpec::balanced(5, 11, 8), {{4, Rational(1, 8)}}), 5, 11);
  CHECK(s82.a5.holds);
  const auto s83 = check_structure(realize_spec(PartitionSpec::balanced(4, 11, 8), {{4, Rational(1, 8)}}), 4, 11);
  CHECK_FALSE(s83.a5.holds);
}

TEST_CASE("N_{m,r}") {
  const Rational p(1, 3), q(1, 5);
  CHECK(nmr(2, 1, p, 1, q, 1) == p * q);
  CHECK(nmr(2, 0, Rational(1, 4), 2, Rational(1, 4), 2) == Rational(3, 8));
  // r = 0 collapses to the plain product sum
  Rational plain(0);
  for (int x = 0; x <= 3; ++x)
    plain += Rational(binomial(3, static_cast<unsigned>(x))) * pow(p, static_cast<unsigned>(x)) *
             Rational(binomial(2, static_cast<unsigned>(3 - x))) * pow(q, static_cast<unsigned>(3 - x));
  CHECK(nmr(3, 0, p, 3, q, 2) == plain);
  CHECK_THROWS_AS(nmr(3, 2, p, 3, q, 2), std::domain_error);
}

TEST_CASE("c_r coefficients") {
  const auto c2 = cr_coefficients(2);
  CHECK(c2 == std::vector<Rational>{Rational(1), Rational(1)});
  const auto c3 = cr_coefficients(3);
  CHECK(c3 == std::vector<Rational>{Rational(3, 4), Rational(9, 8)});
  for (int m = 1; m <= 25; ++m)
    for (const auto &c : cr_coefficients(m))
      CHECK(c.sign() > 0);
}

TEST_CASE("two-part decomposition") {
  CHECK(verify_decomposition(5, Rational(1, 6), 3, Rational(1, 4), 2));
  CHECK(verify_decomposition(10, Rational(1, 10), 5, Rational(1, 10), 5));
  std::mt19937_64 rng(31);
  for (int it = 0; it < 30; ++it) {
    const int P = 1 + static_cast<int>(rng() % 6), Q = 1 + static_cast<int>(rng() % 6);
    const long den = 2 + static_cast<long>(rng() % 30);
    const Rational share(1 + static_cast<long>(rng() % static_cast<unsigned long>(den - 1)), den);
    const int m = 2 + static_cast<int>(rng() % 9);
    CHECK(verify_decomposition(m, share / Rational(P), P, (Rational(1) - share) / Rational(Q), Q));
  }
  CHECK_THROWS_AS(verify_decomposition(3, Rational(1, 3), 1, Rational(1, 3), 1), std::domain_error);
}

TEST_CASE("Maclaurin gap") {
  CHECK(maclaurin_gap({1, 1, 1}, 2) == Rational(0));
  CHECK(maclaurin_gap({1, 2, 3}, 2) == Rational(1));
  CHECK(maclaurin_gap({Rational(1, 2), Rational(1, 2), 1}, 3) == Rational(5, 108));
  std::mt19937_64 rng(41);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i)
      xs.emplace_back(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5));
    const bool constant = std::all_of(xs.begin(), xs.end(), [&](const Rational &x) { return x == xs[0]; });
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      const Rational gap = maclaurin_gap(xs, k);
      CHECK(gap.sign() >= 0);
      if (k >= 2)
        CHECK((gap.is_zero() == constant));
    }
    const std::vector<Rational> flat(n, xs[0]);
    CHECK(maclaurin_gap(flat, static_cast<int>(n)).is_zero());
  }
  CHECK_THROWS_AS(maclaurin_gap({1, 2}, 3), std::domain_error);
  CHECK_THROWS_AS(maclaurin_gap({1, 2}, 0), std::domain_error);
}

TEST_CASE("lemma suite") {
  const auto move = lemma_inequality_suite(3, 1, Rational(1, 5), Rational(2, 5), 4);
  CHECK(move.lemma == Lemma::move_vertex);
  CHECK(move.rows.size() == 3);
  CHECK(move.all_strict());

  const auto avg = lemma_inequality_suite(2, 2, Rational(1, 6), Rational(1, 3), 4);
  CHECK(avg.lemma == Lemma::average_pair);
  CHECK(avg.rows.size() == 3);
  CHECK(avg.all_strict());

  const auto none = lemma_inequality_suite(2, 2, Rational(1, 4), Rational(1, 4), 4);
  CHECK(none.lemma == Lemma::not_applicable);
  CHECK(lemma_name(none.lemma) == "not applicable");

  const auto flip = lemma_inequality_suite(1, 3, Rational(1, 6), Rational(5, 18), 10);
  CHECK(flip.P == 3);
  CHECK(flip.lemma == Lemma::flip_vertex);
  CHECK(flip.all_strict());
  REQUIRE(flip.modified);
  CHECK(validate(*flip.modified).empty());
  CHECK_THROWS_AS(lemma_inequality_suite(2, 2, Rational(1, 4), Rational(1, 3), 4), std::domain_error);
}

TEST_CASE("flipping a vertex ties at the top clique size when P = Q + 1") {
  // With m = P + Q only the term x = P - 1, y = Q survives, so the flip is neutral.
  for (int Q = 1; Q <= 4; ++Q) {
    const int P = Q + 1;
    const Rational p(1, 2 * P - 1);
    const Rational pp = (p + Rational(1, P)) / Rational(2);
    const auto rep = lemma_inequality_suite(P, Q, pp, (Rational(1) - Rational(P) * pp) / Rational(Q), 10);
    REQUIRE(rep.lemma == Lemma::flip_vertex);
    for (const auto &row : rep.rows) {
      if (row.m == P + Q)
        CHECK(row.before == row.after);
      else
        CHECK(row.strict());
    }
  }
}
