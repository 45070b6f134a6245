#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtd/partition.hpp"
#include "rtd/rational.hpp"
#include "rtd/weighted_graph.hpp"

namespace rtd {

struct SearchConfig {
  int n = 0;
  int weight_denominator = 0; // 0 selects 2 n (t - 1)
  std::vector<Rational> edge_alphabet{Rational(1, 2), Rational(1)};
  int s = 0;
  int t = 0;
  unsigned threads = 1;
  double max_space = 1e8;            // edge assignments times weight compositions
  std::size_t max_maximizers = 1000; // longer maximizer lists are truncated

  int denominator() const { return weight_denominator > 0 ? weight_denominator : 2 * n * (t - 1); }
};

class SearchRefused : public std::runtime_error {
public:
  SearchRefused(const std::string &what, double space) : std::runtime_error(what), space_(space) {}
  double space() const { return space_; }

private:
  double space_;
};

struct SearchResult {
  WeightedGraph best;
  Rational density;
  std::vector<WeightedGraph> maximizers; // every discrete maximizer found, in canonical order
  bool maximizers_truncated = false;
  double space = 0;                      // full search space size before pruning
  std::size_t assignments_examined = 0;  // edge assignments surviving isomorphism pruning
  std::size_t free_assignments = 0;      // of those, the K_t-free ones
};

// Exhaustive maximum of the K_s density over K_t-free weighted graphs on n
// vertices with edge weights from the alphabet and positive vertex weights
// k_i / D. Throws SearchRefused when the space exceeds cfg.max_space and
// std::domain_error for malformed configs.
SearchResult brute_force_extremal(const SearchConfig &cfg);
double search_space_size(const SearchConfig &cfg);

struct PropertyCheck {
  bool holds = false;
  std::string detail;
};

struct StructureReport {
  PropertyCheck a1, a2, a3, a4, a5;
  std::vector<std::vector<Vertex>> parts; // classes of the weight-1/2 relation
  int a = 0;
  int b = 0;
  std::optional<PartitionSpec> partition; // set when A2 holds

  bool all_hold() const { return a1.holds && a2.holds && a3.holds && a4.holds && a5.holds; }
};

StructureReport check_structure(const WeightedGraph &g, int s, int t);

// N_{m,r}(p,P;q,Q) = sum_{x+y=m, x,y>=r} C(P,x) p^x C(Q,y) q^y x!y!/((x-r)!(y-r)!).
Rational nmr(int m, int r, const Rational &p, int P, const Rational &q, int Q);

// c_0..c_{floor(m/2)} expressing two-part K_m densities in the N_{m,r} basis.
std::vector<Rational> cr_coefficients(int m);

// Two-part closed form density of R(p,P;q,Q) against sum_r c_r N_{m,r}.
bool verify_decomposition(int m, const Rational &p, int P, const Rational &q, int Q);

// C(n,k) mean^k - e_k(xs).
Rational maclaurin_gap(const std::vector<Rational> &xs, int k);

enum class Lemma { flip_vertex, move_vertex, average_pair, not_applicable };
std::string lemma_name(Lemma l);

struct LemmaRow {
  int m = 0;
  Rational before; // d_{K_m}(R)
  Rational after;  // d_{K_m}(R')
  bool strict() const { return before < after; }
};

struct LemmaReport {
  Lemma lemma = Lemma::not_applicable;
  int P = 0, Q = 0; // after ordering so that P >= Q
  Rational p, q;
  std::optional<WeightedGraph> original, modified;
  std::vector<LemmaRow> rows;

  bool applicable() const { return lemma != Lemma::not_applicable; }
  bool all_strict() const;
};

// Selects the applicable two-part lemma for R(p,P;q,Q), builds its comparison
// graph and evaluates both K_m densities for 2 <= m <= min(m_max, P+Q).
LemmaReport lemma_inequality_suite(int P, int Q, const Rational &p, const Rational &q, int m_max);

} // namespace rtd
