#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rtd/graph.hpp"
#include "rtd/weighted_graph.hpp"

namespace rtd {

struct BEConfig {
  double epsilon = 0.1;
  int h = 100;
  std::uint64_t seed = 1;

  double mu() const;
  // Throws std::domain_error unless 0 < epsilon < 1 and h >= 16.
  void check() const;
};

// Unit vectors in R^dim, row-major.
struct PointSet {
  int dim = 0;
  std::vector<std::vector<double>> points;

  std::size_t size() const { return points.size(); }
};

// Independent uniform directions (normalized Gaussian samples), seeded.
PointSet sample_sphere(std::size_t n, int h, std::uint64_t seed);

// Vertices X then Y. Cross pairs join when |x - y| < sqrt(2) - mu, pairs on
// the same side when |x - x'| > 2 - mu. Throws std::domain_error on a
// dimension mismatch.
SimpleGraph be_graph(const PointSet &x, const PointSet &y, double mu);

// h x h orthogonal matrix with determinant +1, row-major.
std::vector<double> random_rotation(int h, std::uint64_t seed);

enum class PairRule { within_part, complete, empty, be_rotated };
std::string pair_rule_name(PairRule r);

struct PartRange {
  std::size_t begin = 0;
  std::size_t size = 0;
};

struct PairProvenance {
  std::size_t i = 0;
  std::size_t j = 0; // i <= j; i == j for within-part rules
  PairRule rule = PairRule::within_part;
};

struct RealizedGraph {
  std::vector<PartRange> parts;
  SimpleGraph adjacency;
  std::vector<PairProvenance> provenance;
  std::size_t resampled_points = 0;    // points redrawn for landing in the guard band
  std::size_t resampled_rotations = 0; // rotations redrawn for the same reason

  std::size_t order() const { return adjacency.order(); }
  std::size_t part_of(Vertex v) const;
};

// Turns R (edge weights first rounded up to halves) into a concrete graph on
// N vertices: part i has floor(w(i) N) vertices plus a share of the remainder,
// parts are rule-(b) sphere graphs, weight-1 pairs complete bipartite,
// weight-0 pairs empty and weight-1/2 pairs rule (a) after a random rotation.
// Throws std::domain_error if R is invalid or N < |V(R)|.
RealizedGraph realize(const WeightedGraph &r, std::size_t n, const BEConfig &cfg);

// Part sizes used by realize.
std::vector<std::size_t> part_sizes_for(const WeightedGraph &r, std::size_t n);

struct StatsConfig {
  std::size_t clique_budget = 500; // exact clique number up to this order
  std::size_t alpha_budget = 64;   // exact independence number up to this order
  std::size_t samples = 20000;     // random s-subsets for the K_s estimate
  std::uint64_t seed = 1;
};

struct GraphStats {
  std::size_t order = 0;
  std::size_t edges = 0;
  std::size_t omega = 0;
  bool omega_exact = false;
  std::optional<bool> contains_kt; // exact answer when omega is exact
  std::size_t alpha_lower = 0;     // greedy independent set
  std::size_t alpha_upper = 0;     // greedy clique cover
  std::optional<std::size_t> alpha;
  struct PairDensity {
    std::size_t i = 0, j = 0;
    PairRule rule = PairRule::within_part;
    double density = 0;
  };
  std::vector<PairDensity> pair_densities;
  std::size_t samples = 0;
  std::size_t clique_samples = 0;
  double ks_density_estimate = 0; // s! C(N,s) N^{-s} times the sampled clique fraction
};

GraphStats graph_stats(const RealizedGraph &g, int s, int t, const StatsConfig &cfg = {});

// "N parts=[n1,n2,...]" followed by one "u v" line per edge, u < v.
void write_edge_list(std::ostream &out, const RealizedGraph &g);

} // namespace rtd
