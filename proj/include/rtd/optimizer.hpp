#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rtd/partition.hpp"
#include "rtd/rational.hpp"

namespace rtd {

struct OptimizerConfig {
  int grid_bits = 12;                       // 2^grid_bits grid intervals
  double golden_tolerance = 1e-12;          // final bracket width
  std::uint64_t max_denominator = 1'000'000; // rational snapping bound
  double boundary_fraction = 1e-9;          // grid clamp, as a fraction of the interval
  unsigned threads = 1;
};

// K_s density of a spec as a polynomial in the per-vertex weight p of the
// larger size class, with q = (1 - V1 p) / V2 for the smaller class:
//   d(p) = s! * sum_j c_j p^j q^(s-j).
// A spec with a single size class has the fixed uniform weight 1/b.
class SpecObjective {
public:
  SpecObjective(const PartitionSpec &spec, int s);

  bool uniform() const { return classes_.size() == 1; }
  // Upper end of the feasible interval for p, 1 / V1.
  Rational p_max() const { return Rational(1, v1_); }

  WeightAssignment weights_at(const Rational &p) const;
  Rational exact(const Rational &p) const;
  double value(double p) const;
  long double derivative(long double p) const;

private:
  PartitionSpec spec_;
  int s_;
  std::vector<SizeClass> classes_;
  long v1_ = 0, v2_ = 0;
  std::vector<Rational> coeffs_;
  std::vector<long double> coeffs_ld_;
  long double s_factorial_ = 1;
};

struct SpecOptimum {
  PartitionSpec spec;
  WeightAssignment weights;   // the certified point
  Rational certified;         // spec_density at `weights`, exactly
  double estimate = 0;        // floating-point value at the continuous optimum
  double argmax = 0;          // continuous optimum of p (1/b for uniform specs)
  bool degenerate = false;    // certified point puts weight 0 on a class
};

// Maximizes the spec's K_s density over feasible class weights and certifies
// the result at a rational point. Uniform specs are closed form.
SpecOptimum optimize_spec(const PartitionSpec &spec, int s, const OptimizerConfig &cfg = {});

struct OptimizationResult {
  int s = 0;
  int t = 0;
  std::vector<SpecOptimum> per_spec; // in enumerate_specs order
  std::size_t best = 0;              // smallest b among exact maxima
  Rational density;
  std::vector<std::size_t> ties;     // every index with certified == density
};

// Best certified K_s density over all (b,a)-partition specs for (s,t).
// Throws std::domain_error unless 2 <= s <= t - 2.
OptimizationResult rho(int s, int t, const OptimizerConfig &cfg = {});

// The counterexample weightings for t >= 2s: with r = floor(t/2), r + 1
// vertices, two (odd t) or three (even t) parts of size 2 and singletons
// elsewhere; paired vertices weigh 3/(4r) (odd) or 5/(6r) (even), singletons 1/r.
struct ExplicitConstruction {
  PartitionSpec spec;
  WeightAssignment weights;
  Rational density;
  Rational balanced_bound;   // d_{K_s}(K_r^w), an upper bound for the conjectured spec
  bool beats_conjectured = false;
  bool beats_balanced_bound = false;
};

std::optional<ExplicitConstruction> explicit_construction(int s, int t);

struct AuditReport {
  int s = 0;
  int t = 0;
  int conjectured_b = 0; // max(s, floor(t/2))
  int observed_b = 0;
  bool counterexample = false;
  Rational margin;              // best density - best density with b = conjectured_b
  Rational best_density;
  Rational conjectured_density;
  std::optional<ExplicitConstruction> construction;
};

AuditReport audit_conjecture(int s, int t, const OptimizerConfig &cfg = {});
AuditReport audit_from(const OptimizationResult &result);

// f(x) = s! C(x,s) x^{-s} = prod_{i<s} (1 - i/x), extended to rational x.
Rational balanced_clique_density(int s, const Rational &x);

struct PeriodicityRow {
  int t = 0;
  int observed_b = 0;
  int conjectured_b = 0;
  bool counterexample = false;
  Rational margin;
};

struct ConcavityReport {
  int lower = 0; // C(s,2)
  int upper = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<int, int>> violations;
};

struct PeriodicityReport {
  int s = 0;
  std::vector<PeriodicityRow> rows;
  ConcavityReport concavity;
  bool all_match() const;
};

// Audits every t in [s+2, t_max] and checks f(a) + f(b) <= 2 f((a+b)/2)
// for all integers C(s,2) <= a <= b <= concavity_upper. Throws for s < 3.
PeriodicityReport periodicity_check(int s, int t_max, const OptimizerConfig &cfg = {}, int concavity_upper = 40);

} // namespace rtd
