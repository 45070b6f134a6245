#include "rtd/be.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "rtd/clique.hpp"

namespace rtd {

namespace {

constexpr double kGuard = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  return splitmix64(splitmix64(splitmix64(seed ^ splitmix64(a)) ^ b) ^ c);
}

class Directions {
public:
  Directions(int dim, std::uint64_t seed) : dim_(dim), rng_(seed) {}

  std::vector<double> next() {
    std::vector<double> v(static_cast<std::size_t>(dim_));
    double norm2 = 0;
    do {
      norm2 = 0;
      for (auto &x : v) {
        x = normal_(rng_);
        norm2 += x * x;
      }
    } while (norm2 == 0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto &x : v)
      x *= inv;
    return v;
  }

private:
  int dim_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

double dist2(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double within_threshold(double mu) { return (2.0 - mu) * (2.0 - mu); }
double cross_threshold(double mu) { return (std::sqrt(2.0) - mu) * (std::sqrt(2.0) - mu); }

Eigen::MatrixXd as_matrix(const PointSet &p) {
  Eigen::MatrixXd m(p.dim, static_cast<Eigen::Index>(p.size()));
  for (std::size_t j = 0; j < p.size(); ++j)
    for (int i = 0; i < p.dim; ++i)
      m(i, static_cast<Eigen::Index>(j)) = p.points[j][static_cast<std::size_t>(i)];
  return m;
}

// Squared distances between the columns of a and b.
Eigen::MatrixXd cross_dist2(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
  Eigen::MatrixXd d = -2.0 * (a.transpose() * b);
  d.colwise() += a.colwise().squaredNorm().transpose();
  d.rowwise() += b.colwise().squaredNorm();
  return d;
}

} // namespace

double BEConfig::mu() const { return epsilon / std::sqrt(static_cast<double>(h)); }

void BEConfig::check() const {
  if (!(epsilon > 0 && epsilon < 1))
    throw std::domain_error("epsilon must lie in (0,1)");
  if (h < 16)
    throw std::domain_error("h must be at least 16");
}

PointSet sample_sphere(std::size_t n, int h, std::uint64_t seed) {
  if (h < 2)
    throw std::domain_error("sample_sphere needs h >= 2");
  PointSet out{h, {}};
  Directions gen(h, seed);
  for (std::size_t i = 0; i < n; ++i)
    out.points.push_back(gen.next());
  return out;
}

SimpleGraph be_graph(const PointSet &x, const PointSet &y, double mu) {
  if ((!x.points.empty() && !y.points.empty() && x.dim != y.dim))
    throw std::domain_error("point sets live in different dimensions");
  const std::size_t nx = x.size();
  SimpleGraph g(nx + y.size());
  const double within = within_threshold(mu), cross = cross_threshold(mu);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = i + 1; j < nx; ++j)
      if (dist2(x.points[i], x.points[j]) > within)
        g.add_edge(i, j);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (dist2(y.points[i], y.points[j]) > within)
        g.add_edge(nx + i, nx + j);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (dist2(x.points[i], y.points[j]) < cross)
        g.add_edge(i, nx + j);
  return g;
}

std::vector<double> random_rotation(int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(h, h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      a(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < h; ++j)
    if (r(j, j) < 0)
      q.col(j) *= -1;
  if (q.determinant() < 0)
    q.col(0) *= -1;
  std::vector<double> out(static_cast<std::size_t>(h) * static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      out[static_cast<std::size_t>(i * h + j)] = q(i, j);
  return out;
}

std::string pair_rule_name(PairRule r) {
  switch (r) {
  case PairRule::within_part:
    return "within-part";
  case PairRule::complete:
    return "complete";
  case PairRule::empty:
    return "empty";
  case PairRule::be_rotated:
    return "BE-rotated";
  }
  return "?";
}

std::size_t RealizedGraph::part_of(Vertex v) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (v >= parts[i].begin && v < parts[i].begin + parts[i].size)
      return i;
  throw std::out_of_range("vertex outside every part");
}

std::vector<std::size_t> part_sizes_for(const WeightedGraph &r, std::size_t n) {
  const std::size_t k = r.order();
  std::vector<std::size_t> sizes(k);
  std::vector<Rational> frac(k);
  std::size_t used = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Rational x = r.weight(i) * Rational(static_cast<long>(n));
    const mpz_class fl = x.numerator() / x.denominator(); // x >= 0
    sizes[i] = fl.get_ui();
    frac[i] = x - Rational(fl);
    used += sizes[i];
  }
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
  for (std::size_t i = 0; used < n; ++i, ++used)
    ++sizes[order[i % k]];
  return sizes;
}

RealizedGraph realize(const WeightedGraph &input, std::size_t n, const BEConfig &cfg) {
  cfg.check();
  const ValidationReport report = validate(input);
  if (!report.valid())
    throw std::domain_error("cannot realize an invalid weighted graph: " + report.summary());
  if (n < input.order())
    throw std::domain_error("N=" + std::to_string(n) + " is below the order " + std::to_string(input.order()));
  const WeightedGraph r = round_up_to_halves(input);
  const std::size_t k = r.order();
  const double mu = cfg.mu();
  const double within = within_threshold(mu), cross = cross_threshold(mu);

  RealizedGraph out;
  const auto sizes = part_sizes_for(r, n);
  std::size_t begin = 0;
  for (std::size_t sz : sizes) {
    out.parts.push_back({begin, sz});
    begin += sz;
  }
  out.adjacency = SimpleGraph(n);

  // Points per part, redrawing any point whose distance to an earlier one
  // lands within the guard band of the rule-(b) threshold.
  std::vector<PointSet> points(k);
  for (std::size_t i = 0; i < k; ++i) {
    Directions gen(cfg.h, derive(cfg.seed, 1, i));
    points[i].dim = cfg.h;
    while (points[i].size() < sizes[i]) {
      auto p = gen.next();
      bool clear = true;
      for (const auto &q : points[i].points)
        if (std::abs(dist2(p, q) - within) < kGuard) {
          clear = false;
          break;
        }
      if (!clear) {
        ++out.resampled_points;
        continue;
      }
      points[i].points.push_back(std::move(p));
    }
    out.provenance.push_back({i, i, PairRule::within_part});
    const auto &pts = points[i].points;
    for (std::size_t a = 0; a < pts.size(); ++a)
      for (std::size_t b = a + 1; b < pts.size(); ++b)
        if (dist2(pts[a], pts[b]) > within)
          out.adjacency.add_edge(out.parts[i].begin + a, out.parts[i].begin + b);
  }

  const Rational half(1, 2), one(1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Rational &w = r.weight(i, j);
      const PartRange &pi = out.parts[i], &pj = out.parts[j];
      if (w == one) {
        out.provenance.push_back({i, j, PairRule::complete});
        for (std::size_t a = 0; a < pi.size; ++a)
          for (std::size_t b = 0; b < pj.size; ++b)
            out.adjacency.add_edge(pi.begin + a, pj.begin + b);
      } else if (w == half) {
        out.provenance.push_back({i, j, PairRule::be_rotated});
        if (pi.size == 0 || pj.size == 0)
          continue;
        const Eigen::MatrixXd x = as_matrix(points[i]);
        const Eigen::MatrixXd y = as_matrix(points[j]);
        Eigen::MatrixXd d;
        for (std::uint64_t attempt = 0;; ++attempt) {
          const auto rot = random_rotation(cfg.h, derive(cfg.seed, 2, i * k + j, attempt));
          const Eigen::MatrixXd q = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(rot.data(), cfg.h, cfg.h);
          d = cross_dist2(q * x, y);
          if (((d.array() - cross).abs() >= kGuard).all())
            break;
          ++out.resampled_rotations;
        }
        for (std::size_t a = 0; a < pi.size; ++a)
          for (std::size_t b = 0; b < pj.size; ++b)
            if (d(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) < cross)
              out.adjacency.add_edge(pi.begin + a, pj.begin + b);
      } else {
        out.provenance.push_back({i, j, PairRule::empty});
      }
    }
  return out;
}

GraphStats graph_stats(const RealizedGraph &g, int s, int t, const StatsConfig &cfg) {
  GraphStats st;
  const SimpleGraph &adj = g.adjacency;
  const std::size_t n = adj.order();
  st.order = n;
  st.edges = adj.edge_count();

  if (n <= cfg.clique_budget) {
    st.omega = clique_number(adj);
    st.omega_exact = true;
    if (t >= 0)
      st.contains_kt = st.omega >= static_cast<std::size_t>(t);
  } else {
    // Greedy clique: repeatedly take the highest-degree candidate.
    VertexBits cand(n);
    for (Vertex v = 0; v < n; ++v)
      cand.set(v);
    while (!cand.none()) {
      Vertex best = cand.first();
      std::size_t best_deg = 0;
      for (Vertex v : cand.members()) {
        const std::size_t d = (adj.neighbours(v) & cand).count();
        if (d > best_deg) {
          best = v;
          best_deg = d;
        }
      }
      ++st.omega;
      cand &= adj.neighbours(best);
    }
  }

  st.alpha_lower = greedy_independent_set(adj).size();
  st.alpha_upper = greedy_clique_cover(adj).size();
  if (n <= cfg.alpha_budget)
    st.alpha = clique_number(adj.complement());

  for (const auto &pv : g.provenance) {
    const PartRange &pi = g.parts[pv.i], &pj = g.parts[pv.j];
    std::size_t hits = 0, pairs = 0;
    if (pv.i == pv.j) {
      pairs = pi.size * (pi.size - (pi.size > 0 ? 1 : 0)) / 2;
      for (std::size_t a = 0; a < pi.size; ++a)
        for (std::size_t b = a + 1; b < pi.size; ++b)
          hits += adj.adjacent(pi.begin + a, pi.begin + b);
    } else {
      pairs = pi.size * pj.size;
      for (std::size_t a = 0; a < pi.size; ++a)
        for (std::size_t b = 0; b < pj.size; ++b)
          hits += adj.adjacent(pi.begin + a, pj.begin + b);
    }
    st.pair_densities.push_back({pv.i, pv.j, pv.rule, pairs ? static_cast<double>(hits) / static_cast<double>(pairs) : 0.0});
  }

  if (s >= 1 && static_cast<std::size_t>(s) <= n && cfg.samples > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v)
      pool[v] = v;
    const auto ss = static_cast<std::size_t>(s);
    for (std::size_t it = 0; it < cfg.samples; ++it) {
      // Partial Fisher-Yates for a uniform s-subset.
      for (std::size_t i = 0; i < ss; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      bool clique = true;
      for (std::size_t a = 0; a < ss && clique; ++a)
        for (std::size_t b = a + 1; b < ss; ++b)
          if (!adj.adjacent(pool[a], pool[b])) {
            clique = false;
            break;
          }
      st.clique_samples += clique;
    }
    st.samples = cfg.samples;
    // s! C(N,s) / N^s = prod_{i<s} (1 - i/N)
    double scale = 1;
    for (int i = 0; i < s; ++i)
      scale *= 1.0 - static_cast<double>(i) / static_cast<double>(n);
    st.ks_density_estimate = scale * static_cast<double>(st.clique_samples) / static_cast<double>(st.samples);
  }
  return st;
}

void write_edge_list(std::ostream &out, const RealizedGraph &g) {
  out << g.order() << " parts=[";
  for (std::size_t i = 0; i < g.parts.size(); ++i)
    out << (i ? "," : "") << g.parts[i].size;
  out << "]\n";
  for (const auto &[u, v] : g.adjacency.edges())
    out << u << ' ' << v << '\n';
}

} // namespace rtd
