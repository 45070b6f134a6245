#include "rtd/weighted_graph.hpp"

#include <sstream>

namespace rtd {

WeightedGraph::WeightedGraph(std::vector<Rational> vertex_weights)
    : vertex_weights_(std::move(vertex_weights)),
      edges_(vertex_weights_.size() * vertex_weights_.size(), Rational(0)) {}

void WeightedGraph::set_edge(Vertex u, Vertex v, const Rational &w) {
  if (u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  edges_[u * order() + v] = w;
  edges_[v * order() + u] = w;
}

void WeightedGraph::set_entry(Vertex u, Vertex v, const Rational &w) {
  if (u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  edges_[u * order() + v] = w;
}

WeightedGraph WeightedGraph::without(Vertex v) const {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < order(); ++u)
    if (u != v)
      keep.push_back(u);
  std::vector<Rational> weights;
  for (Vertex u : keep)
    weights.push_back(weight(u));
  WeightedGraph out(std::move(weights));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out.set_entry(i, j, weight(keep[i], keep[j]));
  return out;
}

bool ValidationReport::valid() const {
  for (const auto &i : issues)
    if (i.severity == ValidationIssue::Severity::error)
      return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < issues.size(); ++i) {
    if (i)
      os << "; ";
    os << (issues[i].severity == ValidationIssue::Severity::error ? "error: " : "warning: ") << issues[i].message;
  }
  return os.str();
}

ValidationReport validate(const WeightedGraph &g) {
  using Sev = ValidationIssue::Severity;
  ValidationReport report;
  const Rational zero(0), one(1);
  Rational total(0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const Rational &w = g.weight(v);
    total += w;
    if (w < zero || w > one)
      report.issues.push_back({Sev::error, "vertex weight w(" + std::to_string(v) + ") = " + w.str() + " outside [0,1]", {v}});
    else if (w.is_zero())
      report.issues.push_back({Sev::warning, "vertex " + std::to_string(v) + " has weight 0", {v}});
  }
  if (total != one)
    report.issues.push_back({Sev::error, "vertex weights sum to " + total.str() + " != 1", {}});
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!g.weight(u, u).is_zero())
      report.issues.push_back({Sev::error, "w(" + std::to_string(u) + "," + std::to_string(u) + ") = " + g.weight(u, u).str() + " != 0", {u}});
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Rational &a = g.weight(u, v);
      const Rational &b = g.weight(v, u);
      if (a != b)
        report.issues.push_back({Sev::error, "w(" + std::to_string(u) + "," + std::to_string(v) + ") = " + a.str() + " but w(" + std::to_string(v) + "," + std::to_string(u) + ") = " + b.str(), {u, v}});
      if (a < zero || a > one)
        report.issues.push_back({Sev::error, "edge weight w(" + std::to_string(u) + "," + std::to_string(v) + ") = " + a.str() + " outside [0,1]", {u, v}});
    }
  }
  return report;
}

void require_valid(const WeightedGraph &g) {
  const auto report = validate(g);
  if (!report.valid())
    throw std::invalid_argument("invalid weighted graph: " + report.summary());
}

SimpleGraph threshold_subgraph(const WeightedGraph &g, const Rational &alpha) {
  if (alpha < Rational(0) || alpha > Rational(1))
    throw std::domain_error("threshold " + alpha.str() + " outside [0,1]");
  SimpleGraph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.weight(u, v) > alpha)
        out.add_edge(u, v);
  return out;
}

namespace {

void sum_over_maps(const WeightedGraph &g, const SimpleGraph &h, std::vector<Vertex> &sigma,
                   const Rational &partial, Rational &total) {
  const std::size_t i = sigma.size();
  if (i == h.order()) {
    total += partial;
    return;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    Rational term = partial * g.weight(v);
    for (std::size_t j = 0; j < i && !term.is_zero(); ++j)
      if (h.adjacent(i, j))
        term *= g.weight(sigma[j], v);
    if (term.is_zero())
      continue;
    sigma.push_back(v);
    sum_over_maps(g, h, sigma, term, total);
    sigma.pop_back();
  }
}

struct CliqueSum {
  const WeightedGraph &g;
  std::size_t s;
  std::vector<char> allowed;  // vertex may be used
  std::vector<char> required; // vertex must be used
  std::vector<Vertex> chosen;
  Rational total{0};

  void run(Vertex start, const Rational &partial) {
    if (chosen.size() == s) {
      for (Vertex v = start; v < g.order(); ++v)
        if (required[v])
          return;
      total += partial;
      return;
    }
    for (Vertex v = start; v < g.order(); ++v) {
      if (allowed[v]) {
        Rational term = partial * g.weight(v);
        for (Vertex u : chosen) {
          if (term.is_zero())
            break;
          term *= g.weight(u, v);
        }
        if (!term.is_zero()) {
          chosen.push_back(v);
          run(v + 1, term);
          chosen.pop_back();
        }
      }
      // Skipping a required vertex means no completion can contain it.
      if (required[v])
        return;
    }
  }
};

Rational clique_sum(const WeightedGraph &g, std::size_t s, std::vector<char> allowed, std::vector<char> required) {
  if (s == 0)
    return Rational(1);
  CliqueSum cs{g, s, std::move(allowed), std::move(required), {}, Rational(0)};
  cs.run(0, Rational(1));
  return cs.total * Rational(factorial(static_cast<unsigned>(s)));
}

} // namespace

Rational h_density(const WeightedGraph &g, const SimpleGraph &h) {
  const std::size_t s = h.order();
  if (s == 0)
    return Rational(1);
  double maps = 1;
  for (std::size_t i = 0; i < s; ++i)
    maps *= static_cast<double>(g.order());
  if (maps > static_cast<double>(kMaxDensityMaps))
    throw std::length_error("h_density would enumerate " + std::to_string(static_cast<long long>(maps)) +
                            " maps (limit " + std::to_string(kMaxDensityMaps) + ")");
  Rational total(0);
  std::vector<Vertex> sigma;
  sum_over_maps(g, h, sigma, Rational(1), total);
  return total;
}

Rational ks_density(const WeightedGraph &g, std::size_t s) {
  return clique_sum(g, s, std::vector<char>(g.order(), 1), std::vector<char>(g.order(), 0));
}

Rational ks_density_with(const WeightedGraph &g, std::size_t s, const VertexSubset &subset, SubsetMode mode) {
  if (!subset.valid_for(g.order()))
    throw std::out_of_range("vertex subset exceeds graph order");
  std::vector<char> allowed(g.order(), 1), required(g.order(), 0);
  switch (mode) {
  case SubsetMode::containing:
    if (subset.size() > s)
      return Rational(0);
    for (Vertex v : subset.members())
      required[v] = 1;
    break;
  case SubsetMode::within:
    std::fill(allowed.begin(), allowed.end(), 0);
    for (Vertex v : subset.members())
      allowed[v] = 1;
    break;
  case SubsetMode::avoiding:
    for (Vertex v : subset.members())
      allowed[v] = 0;
    break;
  }
  return clique_sum(g, s, std::move(allowed), std::move(required));
}

WeightedGraph merge_zero_edge(const WeightedGraph &g, Vertex u, Vertex v, Keep keep) {
  if (u >= g.order() || v >= g.order())
    throw std::out_of_range("vertex out of range");
  if (u == v)
    throw std::invalid_argument("merge_zero_edge needs two distinct vertices");
  if (!g.weight(u, v).is_zero())
    throw std::invalid_argument("merge_zero_edge: w(" + std::to_string(u) + "," + std::to_string(v) +
                                ") = " + g.weight(u, v).str() + " is not 0");
  const Vertex kept = keep == Keep::u ? u : v;
  const Vertex dropped = keep == Keep::u ? v : u;
  WeightedGraph raised = g;
  raised.set_vertex_weight(kept, g.weight(u) + g.weight(v));
  return raised.without(dropped);
}

WeightedGraph round_up_to_halves(const WeightedGraph &g) {
  const Rational half(1, 2), one(1);
  WeightedGraph out = g;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Rational &w = g.weight(u, v);
      if (w.is_zero())
        continue;
      out.set_edge(u, v, w <= half ? half : one);
    }
  return out;
}

WeightedGraph uniform_complete(std::size_t n, const Rational &edge_weight) {
  if (n == 0)
    throw std::domain_error("uniform_complete needs at least one vertex");
  WeightedGraph g(std::vector<Rational>(n, Rational(1, static_cast<long>(n))));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.set_edge(u, v, edge_weight);
  return g;
}

} // namespace rtd
