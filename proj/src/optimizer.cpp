#include "rtd/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace rtd {

SpecObjective::SpecObjective(const PartitionSpec &spec, int s)
    : spec_(spec), s_(s), classes_(spec.size_classes()) {
  if (s < 0)
    throw std::domain_error("negative clique order");
  s_factorial_ = Rational(factorial(static_cast<unsigned>(s))).to_long_double();
  if (classes_.size() == 1) {
    const auto a = part_polynomial_power(classes_[0].size, classes_[0].count, s);
    coeffs_ = {static_cast<int>(a.size()) > s ? a[static_cast<std::size_t>(s)] : Rational(0)};
    v1_ = spec.b;
  } else if (classes_.size() == 2) {
    v1_ = static_cast<long>(classes_[0].size) * classes_[0].count;
    v2_ = static_cast<long>(classes_[1].size) * classes_[1].count;
    const auto a = part_polynomial_power(classes_[0].size, classes_[0].count, s);
    const auto b = part_polynomial_power(classes_[1].size, classes_[1].count, s);
    coeffs_.assign(static_cast<std::size_t>(s) + 1, Rational(0));
    for (std::size_t j = 0; j < a.size(); ++j) {
      const std::size_t rest = static_cast<std::size_t>(s) - j;
      if (rest < b.size())
        coeffs_[j] = a[j] * b[rest];
    }
  } else {
    throw std::domain_error("balanced specs have at most two size classes");
  }
  for (const auto &c : coeffs_)
    coeffs_ld_.push_back(c.to_long_double());
}

WeightAssignment SpecObjective::weights_at(const Rational &p) const {
  if (uniform())
    return {{classes_[0].size, Rational(1, spec_.b)}};
  const Rational q = (Rational(1) - Rational(v1_) * p) / Rational(v2_);
  return {{classes_[0].size, p}, {classes_[1].size, q}};
}

Rational SpecObjective::exact(const Rational &p) const {
  const Rational sf(factorial(static_cast<unsigned>(s_)));
  if (uniform())
    return sf * coeffs_[0] * pow(Rational(1, spec_.b), static_cast<unsigned>(s_));
  const Rational q = (Rational(1) - Rational(v1_) * p) / Rational(v2_);
  Rational total(0);
  Rational p_pow(1);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero())
      total += coeffs_[j] * p_pow * pow(q, static_cast<unsigned>(s_ - static_cast<int>(j)));
    p_pow *= p;
  }
  return sf * total;
}

double SpecObjective::value(double p_in) const {
  if (uniform())
    return static_cast<double>(s_factorial_ * coeffs_ld_[0] * std::pow(1.0L / spec_.b, s_));
  const long double p = p_in;
  const long double q = (1.0L - static_cast<long double>(v1_) * p) / static_cast<long double>(v2_);
  long double total = 0;
  for (std::size_t j = 0; j < coeffs_ld_.size(); ++j)
    if (coeffs_ld_[j] != 0)
      total += coeffs_ld_[j] * std::pow(p, static_cast<long double>(j)) *
               std::pow(q, static_cast<long double>(s_ - static_cast<int>(j)));
  return static_cast<double>(s_factorial_ * total);
}

long double SpecObjective::derivative(long double p) const {
  if (uniform())
    return 0;
  const long double ratio = static_cast<long double>(v1_) / static_cast<long double>(v2_);
  const long double q = (1.0L - static_cast<long double>(v1_) * p) / static_cast<long double>(v2_);
  long double total = 0;
  for (std::size_t j = 0; j < coeffs_ld_.size(); ++j) {
    if (coeffs_ld_[j] == 0)
      continue;
    const long double jj = static_cast<long double>(j);
    const long double kk = static_cast<long double>(s_) - jj;
    if (j > 0)
      total += coeffs_ld_[j] * jj * std::pow(p, jj - 1) * std::pow(q, kk);
    if (kk > 0)
      total -= coeffs_ld_[j] * kk * ratio * std::pow(p, jj) * std::pow(q, kk - 1);
  }
  return s_factorial_ * total;
}

namespace {

double golden_section_max(const SpecObjective &f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f.value(c), fd = f.value(d);
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f.value(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f.value(d);
    }
  }
  return (a + b) / 2;
}

// Root of the derivative inside [a, b] when it changes sign from + to -.
std::optional<long double> stationary_point(const SpecObjective &f, long double a, long double b) {
  long double fa = f.derivative(a), fb = f.derivative(b);
  if (!(fa > 0 && fb < 0))
    return std::nullopt;
  for (int it = 0; it < 200 && b - a > 0; ++it) {
    const long double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b)
      break;
    const long double fm = f.derivative(mid);
    if (fm > 0)
      a = mid;
    else if (fm < 0)
      b = mid;
    else
      return mid;
  }
  return a + (b - a) / 2;
}

} // namespace

SpecOptimum optimize_spec(const PartitionSpec &spec, int s, const OptimizerConfig &cfg) {
  const SpecObjective objective(spec, s);
  SpecOptimum out;
  out.spec = spec;
  if (objective.uniform()) {
    out.weights = objective.weights_at(Rational(0));
    out.certified = objective.exact(Rational(0));
    out.estimate = out.certified.to_double();
    out.argmax = 1.0 / spec.b;
    return out;
  }

  const Rational p_max = objective.p_max();
  const double hi_end = p_max.to_double();
  const double lo = hi_end * cfg.boundary_fraction;
  const double hi = hi_end - hi_end * cfg.boundary_fraction;
  const std::size_t intervals = std::size_t{1} << cfg.grid_bits;
  std::size_t best_i = 0;
  double best_v = -1;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double p = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
    const double v = objective.value(p);
    if (v > best_v) {
      best_v = v;
      best_i = i;
    }
  }
  auto grid_point = [&](std::size_t i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
  };
  const double a = grid_point(best_i == 0 ? 0 : best_i - 1);
  const double b = grid_point(std::min(best_i + 1, intervals));
  const double golden = golden_section_max(objective, a, b, cfg.golden_tolerance);
  long double p_star = golden;
  if (auto root = stationary_point(objective, a, b))
    p_star = *root;
  out.argmax = static_cast<double>(p_star);
  out.estimate = objective.value(out.argmax);

  // Certify: best exact value over the rational snaps of p*.
  std::vector<Rational> candidates = convergents(p_star, cfg.max_denominator);
  candidates.push_back(best_rational_approximation(p_star, cfg.max_denominator));
  const Rational zero(0);
  std::optional<Rational> best_p;
  Rational best_exact(-1);
  for (const auto &c : candidates) {
    if (c <= zero || c >= p_max)
      continue;
    const Rational v = objective.exact(c);
    if (v > best_exact) {
      best_exact = v;
      best_p = c;
    }
  }
  if (!best_p) {
    const Rational fallback = Rational::from_double(static_cast<double>(p_star));
    best_p = fallback;
    best_exact = objective.exact(fallback);
  }
  out.weights = objective.weights_at(*best_p);
  out.certified = best_exact;

  // Limits where a whole class vanishes.
  for (const Rational &end : {zero, p_max}) {
    const Rational v = objective.exact(end);
    if (v > out.certified) {
      out.certified = v;
      out.weights = objective.weights_at(end);
      out.degenerate = true;
    }
  }
  return out;
}

OptimizationResult rho(int s, int t, const OptimizerConfig &cfg) {
  if (s < 2 || s > t - 2)
    throw std::domain_error("rho needs 2 <= s <= t - 2 (got s=" + std::to_string(s) + ", t=" + std::to_string(t) + ")");
  OptimizationResult result;
  result.s = s;
  result.t = t;
  const auto specs = enumerate_specs(s, t);
  result.per_spec.resize(specs.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++)
      result.per_spec[i] = optimize_spec(specs[i], s, cfg);
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(specs.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_threads; ++i)
      pool.emplace_back(worker);
    for (auto &th : pool)
      th.join();
  }

  for (std::size_t i = 0; i < result.per_spec.size(); ++i)
    if (i == 0 || result.per_spec[i].certified > result.density) {
      result.density = result.per_spec[i].certified;
      result.best = i;
    }
  for (std::size_t i = 0; i < result.per_spec.size(); ++i)
    if (result.per_spec[i].certified == result.density)
      result.ties.push_back(i);
  return result;
}

Rational balanced_clique_density(int s, const Rational &x) {
  if (x.sign() <= 0)
    throw std::domain_error("balanced_clique_density needs x > 0");
  Rational f(1);
  for (int i = 1; i < s; ++i)
    f *= Rational(1) - Rational(i) / x;
  return f;
}

std::optional<ExplicitConstruction> explicit_construction(int s, int t) {
  if (t < 2 * s)
    return std::nullopt;
  const int r = t / 2;
  const bool odd = t % 2 == 1;
  const int paired_parts = odd ? 2 : 3;
  const int singles = r + 1 - 2 * paired_parts;
  if (singles < 0)
    return std::nullopt;
  ExplicitConstruction c;
  c.spec = {s, t, r + 1, paired_parts + singles, {}};
  c.spec.part_sizes.assign(static_cast<std::size_t>(paired_parts), 2);
  c.spec.part_sizes.insert(c.spec.part_sizes.end(), static_cast<std::size_t>(singles), 1);
  if (!spec_violation(c.spec).empty())
    return std::nullopt;
  c.weights[2] = odd ? Rational(3, 4L * r) : Rational(5, 6L * r);
  if (singles > 0)
    c.weights[1] = Rational(1, r);
  c.density = spec_density(c.spec, c.weights, s);
  c.balanced_bound = balanced_clique_density(s, Rational(r));
  return c;
}

AuditReport audit_from(const OptimizationResult &result) {
  AuditReport report;
  report.s = result.s;
  report.t = result.t;
  report.conjectured_b = std::max(result.s, result.t / 2);
  const auto &best = result.per_spec.at(result.best);
  report.observed_b = best.spec.b;
  report.best_density = result.density;
  bool found = false;
  for (const auto &o : result.per_spec)
    if (o.spec.b == report.conjectured_b && (!found || o.certified > report.conjectured_density)) {
      report.conjectured_density = o.certified;
      found = true;
    }
  if (!found)
    throw std::logic_error("no enumerated spec has the conjectured b=" + std::to_string(report.conjectured_b));
  report.margin = report.best_density - report.conjectured_density;
  report.counterexample = report.observed_b != report.conjectured_b && report.margin.sign() > 0;
  report.construction = explicit_construction(result.s, result.t);
  if (report.construction) {
    report.construction->beats_conjectured = report.construction->density > report.conjectured_density;
    report.construction->beats_balanced_bound = report.construction->density > report.construction->balanced_bound;
  }
  return report;
}

AuditReport audit_conjecture(int s, int t, const OptimizerConfig &cfg) { return audit_from(rho(s, t, cfg)); }

bool PeriodicityReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const PeriodicityRow &r) { return r.observed_b == r.conjectured_b; }) &&
         concavity.violations.empty();
}

PeriodicityReport periodicity_check(int s, int t_max, const OptimizerConfig &cfg, int concavity_upper) {
  if (s < 3)
    throw std::domain_error("periodicity_check needs s >= 3");
  PeriodicityReport report;
  report.s = s;
  for (int t = s + 2; t <= t_max; ++t) {
    const AuditReport a = audit_conjecture(s, t, cfg);
    report.rows.push_back({t, a.observed_b, a.conjectured_b, a.counterexample, a.margin});
  }
  auto &cc = report.concavity;
  cc.lower = s * (s - 1) / 2;
  cc.upper = concavity_upper;
  for (int x = cc.lower; x <= cc.upper; ++x)
    for (int y = x; y <= cc.upper; ++y) {
      ++cc.pairs_checked;
      const Rational lhs = balanced_clique_density(s, Rational(x)) + balanced_clique_density(s, Rational(y));
      const Rational rhs = Rational(2) * balanced_clique_density(s, Rational(x + y, 2));
      if (lhs > rhs)
        cc.violations.emplace_back(x, y);
    }
  return report;
}

} // namespace rtd
