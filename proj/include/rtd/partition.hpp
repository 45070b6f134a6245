#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "rtd/rational.hpp"
#include "rtd/weighted_graph.hpp"

namespace rtd {

struct SizeClass {
  int size = 0;  // vertices per part
  int count = 0; // number of parts of this size
  friend bool operator==(const SizeClass &, const SizeClass &) = default;
};

// Skeleton of a (b,a)-partition: b vertices split into a balanced parts,
// weight 1/2 inside a part and weight 1 across parts.
struct PartitionSpec {
  int s = 0;
  int t = 0;
  int b = 0;
  int a = 0;
  std::vector<int> part_sizes; // non-increasing

  // The balanced spec for (s, t, b): a = t - 1 - b parts, b mod a of them one larger.
  static PartitionSpec balanced(int s, int t, int b);

  // Distinct part sizes, largest first.
  std::vector<SizeClass> size_classes() const;
  int vertices_in_class(int size) const;

  friend bool operator==(const PartitionSpec &, const PartitionSpec &) = default;
};

// Empty when the spec satisfies a + b = t - 1, b >= max(s, ceil((t-1)/2)),
// balanced sizes and (for s >= 3) the size alternative of the structure
// theorem; otherwise a description of the first violated condition.
std::string spec_violation(const PartitionSpec &spec);

// Per-vertex weight for each part size.
using WeightAssignment = std::map<int, Rational>;

// Sum of part sizes times class weights; 1 for a feasible assignment.
Rational total_weight(const PartitionSpec &spec, const WeightAssignment &w);

// All balanced specs for (s, t), by increasing b. For s = 2 the size
// alternative is not applied. Throws std::domain_error unless t >= s + 2 and s >= 2.
std::vector<PartitionSpec> enumerate_specs(int s, int t);

// b vertices, parts consecutive in part_sizes order. Throws std::domain_error
// unless the weights are positive and sum to 1.
WeightedGraph realize_spec(const PartitionSpec &spec, const WeightAssignment &w);

// Closed-form K_m density of the realized spec. Zero class weights are
// accepted (the class then contributes nothing), negative ones are not.
Rational spec_density(const PartitionSpec &spec, const WeightAssignment &w, int m);

// r vertices of weight 1/r, every edge weight 1.
WeightedGraph complete_balanced(int r);

// Weighted graph with arbitrary parts: part i has sizes[i] vertices of weight
// weights[i], edges 1/2 within parts and 1 across.
WeightedGraph multipart_graph(const std::vector<int> &sizes, const std::vector<Rational> &weights);

// Closed-form K_m density of multipart_graph(sizes, weights).
Rational multipart_density(const std::vector<int> &sizes, const std::vector<Rational> &weights, int m);

// Coefficients of sum_m C(n,m) 2^{-C(m,2)} x^m raised to the given power,
// truncated at max_degree. A part of size n and vertex weight w contributes
// the factor with x replaced by w x.
std::vector<Rational> part_polynomial_power(int size, int power, int max_degree);

} // namespace rtd
