#include "rtd/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rtd {

namespace {

std::vector<Rational> multiply_truncated(const std::vector<Rational> &x, const std::vector<Rational> &y, int max_degree) {
  const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  std::vector<Rational> out(std::min(len, x.size() + y.size() - 1), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < y.size() && i + j < out.size(); ++j)
      if (!y[j].is_zero())
        out[i + j] += x[i] * y[j];
  }
  return out;
}

// 2^{-C(m,2)} C(n,m) for m = 0..n: the K_m count of a single part of size n
// with unit vertex weights, per unit of s!.
std::vector<Rational> part_polynomial(int size, int max_degree) {
  std::vector<Rational> h;
  for (int m = 0; m <= std::min(size, max_degree); ++m) {
    mpz_class den = 1;
    den <<= static_cast<unsigned>(m * (m - 1) / 2);
    h.emplace_back(binomial(static_cast<unsigned>(size), static_cast<unsigned>(m)), den);
  }
  return h;
}

} // namespace

std::vector<Rational> part_polynomial_power(int size, int power, int max_degree) {
  std::vector<Rational> result{Rational(1)};
  std::vector<Rational> base = part_polynomial(size, max_degree);
  while (power > 0) {
    if (power & 1)
      result = multiply_truncated(result, base, max_degree);
    power >>= 1;
    if (power)
      base = multiply_truncated(base, base, max_degree);
  }
  return result;
}

PartitionSpec PartitionSpec::balanced(int s, int t, int b) {
  const int a = t - 1 - b;
  if (a < 1 || b < a)
    throw std::domain_error("no balanced partition with b=" + std::to_string(b) + ", a=" + std::to_string(a));
  PartitionSpec spec{s, t, b, a, {}};
  const int small = b / a;
  const int larger = b % a;
  for (int i = 0; i < a; ++i)
    spec.part_sizes.push_back(i < larger ? small + 1 : small);
  return spec;
}

std::vector<SizeClass> PartitionSpec::size_classes() const {
  std::vector<SizeClass> out;
  for (int size : part_sizes) {
    if (!out.empty() && out.back().size == size)
      ++out.back().count;
    else
      out.push_back({size, 1});
  }
  return out;
}

int PartitionSpec::vertices_in_class(int size) const {
  int n = 0;
  for (int p : part_sizes)
    if (p == size)
      n += p;
  return n;
}

std::string spec_violation(const PartitionSpec &spec) {
  if (spec.a < 1 || static_cast<int>(spec.part_sizes.size()) != spec.a)
    return "part count does not match a";
  int sum = 0;
  for (int p : spec.part_sizes) {
    if (p < 1)
      return "empty part";
    sum += p;
  }
  if (sum != spec.b)
    return "part sizes sum to " + std::to_string(sum) + ", not b=" + std::to_string(spec.b);
  if (spec.a + spec.b != spec.t - 1)
    return "a + b != t - 1";
  if (spec.b < spec.s || spec.b < spec.t / 2)
    return "b below max(s, ceil((t-1)/2))";
  if (!std::is_sorted(spec.part_sizes.rbegin(), spec.part_sizes.rend()))
    return "part sizes not listed in non-increasing order";
  if (spec.part_sizes.front() - spec.part_sizes.back() > 1)
    return "part sizes differ by more than 1";
  if (spec.s >= 3) {
    const bool single = spec.a == 1 && spec.b == spec.s;
    const bool small_parts = spec.a >= 2 && spec.part_sizes.front() <= spec.s - 1;
    if (!single && !small_parts)
      return "neither a=1 with b=s nor a>=2 with parts of size <= s-1";
  }
  return {};
}

Rational total_weight(const PartitionSpec &spec, const WeightAssignment &w) {
  Rational total(0);
  for (int p : spec.part_sizes) {
    const auto it = w.find(p);
    if (it == w.end())
      throw std::domain_error("no weight given for part size " + std::to_string(p));
    total += Rational(p) * it->second;
  }
  return total;
}

std::vector<PartitionSpec> enumerate_specs(int s, int t) {
  if (s < 2 || t < s + 2)
    throw std::domain_error("enumerate_specs needs s >= 2 and t >= s + 2 (got s=" + std::to_string(s) +
                            ", t=" + std::to_string(t) + ")");
  std::vector<PartitionSpec> out;
  for (int b = std::max(s, t / 2); b <= t - 2; ++b) {
    PartitionSpec spec = PartitionSpec::balanced(s, t, b);
    if (spec_violation(spec).empty())
      out.push_back(std::move(spec));
  }
  return out;
}

namespace {

std::vector<Rational> per_part_weights(const PartitionSpec &spec, const WeightAssignment &w) {
  std::vector<Rational> weights;
  for (int p : spec.part_sizes) {
    const auto it = w.find(p);
    if (it == w.end())
      throw std::domain_error("no weight given for part size " + std::to_string(p));
    if (it->second.sign() < 0)
      throw std::domain_error("negative class weight for part size " + std::to_string(p));
    weights.push_back(it->second);
  }
  return weights;
}

} // namespace

WeightedGraph realize_spec(const PartitionSpec &spec, const WeightAssignment &w) {
  const auto weights = per_part_weights(spec, w);
  for (const auto &x : weights)
    if (x.sign() <= 0)
      throw std::domain_error("realize_spec needs positive class weights");
  if (total_weight(spec, w) != Rational(1))
    throw std::domain_error("class weights sum to " + total_weight(spec, w).str() + ", not 1");
  return multipart_graph(spec.part_sizes, weights);
}

Rational spec_density(const PartitionSpec &spec, const WeightAssignment &w, int m) {
  const auto weights = per_part_weights(spec, w);
  if (total_weight(spec, w) != Rational(1))
    throw std::domain_error("class weights sum to " + total_weight(spec, w).str() + ", not 1");
  return multipart_density(spec.part_sizes, weights, m);
}

WeightedGraph complete_balanced(int r) {
  if (r < 1)
    throw std::domain_error("complete_balanced needs r >= 1");
  return uniform_complete(static_cast<std::size_t>(r), Rational(1));
}

WeightedGraph multipart_graph(const std::vector<int> &sizes, const std::vector<Rational> &weights) {
  if (sizes.size() != weights.size())
    throw std::invalid_argument("one weight per part required");
  std::vector<Rational> vw;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (int k = 0; k < sizes[i]; ++k) {
      vw.push_back(weights[i]);
      part_of.push_back(i);
    }
  WeightedGraph g(std::move(vw));
  const Rational half(1, 2), one(1);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      g.set_edge(u, v, part_of[u] == part_of[v] ? half : one);
  return g;
}

Rational multipart_density(const std::vector<int> &sizes, const std::vector<Rational> &weights, int m) {
  if (sizes.size() != weights.size())
    throw std::invalid_argument("one weight per part required");
  if (m < 0)
    throw std::domain_error("negative clique order");
  // Group identical (size, weight) parts so each group is one polynomial power.
  std::vector<std::pair<int, Rational>> keys;
  std::vector<int> counts;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto it = std::find(keys.begin(), keys.end(), std::make_pair(sizes[i], weights[i]));
    if (it == keys.end()) {
      keys.emplace_back(sizes[i], weights[i]);
      counts.push_back(1);
    } else {
      ++counts[static_cast<std::size_t>(it - keys.begin())];
    }
  }
  std::vector<Rational> product{Rational(1)};
  for (std::size_t g = 0; g < keys.size(); ++g) {
    std::vector<Rational> factor = part_polynomial_power(keys[g].first, counts[g], m);
    Rational scale(1);
    for (auto &c : factor) {
      c *= scale;
      scale *= keys[g].second;
    }
    product = multiply_truncated(product, factor, m);
  }
  if (static_cast<int>(product.size()) <= m)
    return Rational(0);
  return product[static_cast<std::size_t>(m)] * Rational(factorial(static_cast<unsigned>(m)));
}

} // namespace rtd
