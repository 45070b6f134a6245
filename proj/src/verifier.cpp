#include "rtd/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include "rtd/ckt.hpp"

namespace rtd {

namespace {

using Wide = __int128;

struct Subset {
  std::vector<int> vertices;
  std::vector<int> edges; // edge indices inside the subset
};

int edge_index(int n, int i, int j) {
  if (i > j)
    std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

void collect_subsets(int n, int s, int start, std::vector<int> &cur, std::vector<Subset> &out) {
  if (static_cast<int>(cur.size()) == s) {
    Subset sub{cur, {}};
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b)
        sub.edges.push_back(edge_index(n, cur[a], cur[b]));
    out.push_back(std::move(sub));
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    collect_subsets(n, s, v + 1, cur, out);
    cur.pop_back();
  }
}

void collect_compositions(int parts, int total, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 1; k <= total - (parts - 1); ++k) {
    cur.push_back(k);
    collect_compositions(parts - 1, total - k, cur, out);
    cur.pop_back();
  }
}

double binomial_double(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::vector<Rational> normalized_alphabet(const std::vector<Rational> &alphabet) {
  std::vector<Rational> a = alphabet;
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (a.empty())
    throw std::domain_error("edge alphabet is empty");
  for (const auto &x : a)
    if (x != Rational(0) && x != Rational(1, 2) && x != Rational(1))
      throw std::domain_error("edge alphabet entries must be 0, 1/2 or 1 (got " + x.str() + ")");
  return a;
}

struct Hit {
  std::uint64_t code;
  std::size_t composition;
};

struct Shard {
  Wide best = -1;
  std::vector<Hit> hits;
  std::size_t examined = 0;
  std::size_t free = 0;
};

} // namespace

double search_space_size(const SearchConfig &cfg) {
  const int n = cfg.n;
  const double edges = n * (n - 1) / 2.0;
  return std::pow(static_cast<double>(normalized_alphabet(cfg.edge_alphabet).size()), edges) *
         binomial_double(cfg.denominator() - 1, n - 1);
}

SearchResult brute_force_extremal(const SearchConfig &cfg) {
  const int n = cfg.n;
  const int s = cfg.s;
  const int D = cfg.denominator();
  if (n < 1)
    throw std::domain_error("search needs n >= 1");
  if (s < 0)
    throw std::domain_error("search needs s >= 0");
  if (cfg.t < 2)
    throw std::domain_error("search needs t >= 2");
  if (D < n)
    throw std::domain_error("weight denominator " + std::to_string(D) + " is below n=" + std::to_string(n));
  const std::vector<Rational> alphabet = normalized_alphabet(cfg.edge_alphabet);

  SearchResult result;
  result.space = search_space_size(cfg);
  if (result.space > cfg.max_space)
  {
    char msg[160];
    std::snprintf(msg, sizeof msg, "search space of about %.3g configurations exceeds the limit of %.3g", result.space, cfg.max_space);
    throw SearchRefused(msg, result.space);
  }
  const int half_pairs = s * (s - 1) / 2;
  if (binomial_double(n, s) * std::pow(2.0, half_pairs) * std::pow(static_cast<double>(D), s) > 1e36)
    throw std::domain_error("search density numerators would overflow; lower D or s");

  const int E = n * (n - 1) / 2;
  const auto A = static_cast<std::uint64_t>(alphabet.size());
  std::uint64_t total_codes = 1;
  for (int e = 0; e < E; ++e)
    total_codes *= A;

  std::vector<Subset> subsets;
  if (s <= n) {
    std::vector<int> cur;
    collect_subsets(n, s, 0, cur, subsets);
  }
  std::vector<std::vector<int>> compositions;
  {
    std::vector<int> cur;
    collect_compositions(n, D, cur, compositions);
  }

  // Edge permutations for isomorphism pruning.
  std::vector<std::vector<int>> perms;
  if (n <= 6) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      std::vector<int> pe(static_cast<std::size_t>(E));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          pe[static_cast<std::size_t>(edge_index(n, i, j))] = edge_index(n, pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(j)]);
      perms.push_back(std::move(pe));
    } while (std::next_permutation(pi.begin(), pi.end()));
  }

  std::vector<int> zero_label(alphabet.size(), 0), half_label(alphabet.size(), 0);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    zero_label[i] = alphabet[i].is_zero();
    half_label[i] = alphabet[i] == Rational(1, 2);
  }

  auto decode = [&](std::uint64_t code) {
    std::vector<int> labels(static_cast<std::size_t>(E));
    for (int e = 0; e < E; ++e) {
      labels[static_cast<std::size_t>(e)] = static_cast<int>(code % A);
      code /= A;
    }
    return labels;
  };
  auto is_canonical = [&](const std::vector<int> &labels) {
    std::vector<int> image(labels.size());
    for (const auto &pe : perms) {
      for (std::size_t e = 0; e < labels.size(); ++e)
        image[static_cast<std::size_t>(pe[e])] = labels[e];
      if (image < labels)
        return false;
    }
    return true;
  };
  auto build = [&](const std::vector<int> &labels, const std::vector<int> &ks) {
    std::vector<Rational> w;
    for (int k : ks)
      w.emplace_back(k, D);
    WeightedGraph g(std::move(w));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        g.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), alphabet[static_cast<std::size_t>(labels[static_cast<std::size_t>(edge_index(n, i, j))])]);
    return g;
  };
  const std::vector<int> uniform(static_cast<std::size_t>(n), 1);

  auto run_shard = [&](unsigned shard, unsigned shards, Shard &out) {
    std::vector<std::pair<const Subset *, Wide>> live;
    for (std::uint64_t code = shard; code < total_codes; code += shards) {
      const std::vector<int> labels = decode(code);
      if (!perms.empty() && !is_canonical(labels))
        continue;
      ++out.examined;
      if (max_weighted_clique_score(build(labels, uniform)).score >= static_cast<std::size_t>(cfg.t))
        continue;
      ++out.free;
      live.clear();
      for (const auto &sub : subsets) {
        int halves = 0;
        bool zero = false;
        for (int e : sub.edges) {
          const int l = labels[static_cast<std::size_t>(e)];
          zero = zero || zero_label[static_cast<std::size_t>(l)];
          halves += half_label[static_cast<std::size_t>(l)];
        }
        if (!zero)
          live.emplace_back(&sub, Wide(1) << (half_pairs - halves));
      }
      for (std::size_t c = 0; c < compositions.size(); ++c) {
        const auto &ks = compositions[c];
        Wide num = 0;
        for (const auto &[sub, mult] : live) {
          Wide term = mult;
          for (int v : sub->vertices)
            term *= ks[static_cast<std::size_t>(v)];
          num += term;
        }
        if (num > out.best) {
          out.best = num;
          out.hits.clear();
        }
        if (num == out.best)
          out.hits.push_back({code, c});
      }
    }
  };

  const unsigned shards = std::max(1u, cfg.threads);
  std::vector<Shard> results(shards);
  if (shards == 1) {
    run_shard(0, 1, results[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < shards; ++i)
      pool.emplace_back(run_shard, i, shards, std::ref(results[i]));
    for (auto &th : pool)
      th.join();
  }

  Wide best = -1;
  std::vector<Hit> hits;
  for (const auto &sh : results) {
    result.assignments_examined += sh.examined;
    result.free_assignments += sh.free;
    if (sh.best > best) {
      best = sh.best;
      hits.clear();
    }
    if (sh.best == best)
      hits.insert(hits.end(), sh.hits.begin(), sh.hits.end());
  }
  if (best < 0)
    throw std::domain_error("no K_t-free configuration exists for these parameters");
  std::sort(hits.begin(), hits.end(), [](const Hit &x, const Hit &y) {
    return std::tie(x.code, x.composition) < std::tie(y.code, y.composition);
  });
  if (hits.size() > cfg.max_maximizers) {
    hits.resize(cfg.max_maximizers);
    result.maximizers_truncated = true;
  }
  for (const Hit &h : hits)
    result.maximizers.push_back(build(decode(h.code), compositions[h.composition]));
  result.best = result.maximizers.front();

  // numerator / (D^s 2^{C(s,2)}), times s!
  mpz_class num_z = 0;
  {
    Wide x = best;
    std::string digits;
    if (x == 0)
      digits = "0";
    while (x > 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
      x /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    num_z = mpz_class(digits);
  }
  mpz_class den = 1;
  for (int i = 0; i < s; ++i)
    den *= D;
  den <<= static_cast<unsigned>(half_pairs);
  result.density = Rational(num_z * factorial(static_cast<unsigned>(s)), den);
  return result;
}

StructureReport check_structure(const WeightedGraph &g, int s, int t) {
  StructureReport r;
  const std::size_t n = g.order();
  const Rational half(1, 2), one(1);

  r.a1.holds = true;
  for (Vertex u = 0; u < n && r.a1.holds; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.weight(u, v) != half && g.weight(u, v) != one) {
        r.a1 = {false, "edge " + std::to_string(u) + "-" + std::to_string(v) + " has weight " + g.weight(u, v).str()};
        break;
      }
  if (r.a1.holds)
    r.a1.detail = "all edge weights are 1/2 or 1";

  // Parts: connected components of the weight-1/2 relation.
  std::vector<int> comp(n, -1);
  for (Vertex start = 0; start < n; ++start) {
    if (comp[start] >= 0)
      continue;
    const int id = static_cast<int>(r.parts.size());
    r.parts.emplace_back();
    std::vector<Vertex> stack{start};
    comp[start] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      r.parts.back().push_back(u);
      for (Vertex v = 0; v < n; ++v)
        if (v != u && comp[v] < 0 && g.weight(u, v) == half) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(r.parts.back().begin(), r.parts.back().end());
  }
  r.a = static_cast<int>(r.parts.size());
  r.b = static_cast<int>(n);

  r.a2.holds = true;
  auto fail2 = [&](std::string why) {
    if (r.a2.holds)
      r.a2 = {false, std::move(why)};
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const bool same = comp[u] == comp[v];
      if (same && g.weight(u, v) != half)
        fail2("vertices " + std::to_string(u) + "," + std::to_string(v) + " share a part but have edge weight " + g.weight(u, v).str());
      if (!same && g.weight(u, v) != one)
        fail2("vertices " + std::to_string(u) + "," + std::to_string(v) + " are in different parts but have edge weight " + g.weight(u, v).str());
      if (same && g.weight(u) != g.weight(v))
        fail2("vertices " + std::to_string(u) + "," + std::to_string(v) + " share a part but have different weights");
    }
  if (r.b < s)
    fail2("b=" + std::to_string(r.b) + " < s=" + std::to_string(s));
  if (r.a + r.b != t - 1)
    fail2("a + b = " + std::to_string(r.a + r.b) + " != t - 1 = " + std::to_string(t - 1));
  if (r.a2.holds)
    r.a2.detail = "(" + std::to_string(r.b) + "," + std::to_string(r.a) + ")-partition";

  std::vector<int> sizes;
  for (const auto &p : r.parts)
    sizes.push_back(static_cast<int>(p.size()));
  const int max_size = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  const int min_size = sizes.empty() ? 0 : *std::min_element(sizes.begin(), sizes.end());
  r.a3.holds = max_size - min_size <= 1;
  r.a3.detail = "part sizes between " + std::to_string(min_size) + " and " + std::to_string(max_size);

  r.a4.holds = true;
  r.a4.detail = "larger parts never carry heavier vertices";
  for (std::size_t i = 0; i < r.parts.size() && r.a4.holds; ++i)
    for (std::size_t j = 0; j < r.parts.size() && r.a4.holds; ++j) {
      if (r.parts[i].size() <= r.parts[j].size())
        continue;
      for (Vertex u : r.parts[i])
        for (Vertex v : r.parts[j])
          if (r.a4.holds && g.weight(u) > g.weight(v))
            r.a4 = {false, "vertex " + std::to_string(u) + " in a part of size " + std::to_string(r.parts[i].size()) +
                               " outweighs vertex " + std::to_string(v) + " in a part of size " + std::to_string(r.parts[j].size())};
    }

  if (s < 3) {
    r.a5 = {true, "size alternative only constrains s >= 3"};
  } else {
    const bool single = r.a == 1 && r.b == s;
    const bool small = r.a >= 2 && max_size <= s - 1;
    r.a5.holds = single || small;
    r.a5.detail = single ? "a = 1 and b = s"
                  : small ? "a >= 2 and every part has at most s - 1 vertices"
                          : "a=" + std::to_string(r.a) + ", b=" + std::to_string(r.b) + ", largest part " + std::to_string(max_size);
  }

  if (r.a2.holds) {
    PartitionSpec spec{s, t, r.b, r.a, sizes};
    std::sort(spec.part_sizes.rbegin(), spec.part_sizes.rend());
    r.partition = spec;
  }
  return r;
}

namespace {

Rational falling(int x, int r) {
  mpz_class out = 1;
  for (int i = 0; i < r; ++i)
    out *= x - i;
  return Rational(out);
}

} // namespace

Rational nmr(int m, int r, const Rational &p, int P, const Rational &q, int Q) {
  if (r < 0 || 2 * r > m)
    throw std::domain_error("nmr needs 0 <= r <= m/2 (got m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")");
  if (P < 1 || Q < 1)
    throw std::domain_error("nmr needs P, Q >= 1");
  Rational total(0);
  for (int x = r; x <= m - r; ++x) {
    const int y = m - x;
    if (x > P || y > Q)
      continue;
    total += Rational(binomial(static_cast<unsigned>(P), static_cast<unsigned>(x))) * pow(p, static_cast<unsigned>(x)) *
             Rational(binomial(static_cast<unsigned>(Q), static_cast<unsigned>(y))) * pow(q, static_cast<unsigned>(y)) *
             falling(x, r) * falling(y, r);
  }
  return total;
}

std::vector<Rational> cr_coefficients(int m) {
  if (m < 1)
    throw std::domain_error("cr_coefficients needs m >= 1");
  const Rational base(factorial(static_cast<unsigned>(m)), mpz_class(1) << static_cast<unsigned>(m * (m - 1) / 2));
  std::vector<Rational> c;
  for (int r = 0; 2 * r <= m; ++r) {
    Rational rhs = base * Rational(mpz_class(mpz_class(1) << static_cast<unsigned>(r * (m - r))));
    // coefficient of c_i: r!(m-r)!/((r-i)!(m-r-i)!) = falling(r,i) falling(m-r,i)
    for (int i = 0; i < r; ++i)
      rhs -= falling(r, i) * falling(m - r, i) * c[static_cast<std::size_t>(i)];
    c.push_back(rhs / (falling(r, r) * falling(m - r, r)));
  }
  return c;
}

bool verify_decomposition(int m, const Rational &p, int P, const Rational &q, int Q) {
  if (P < 1 || Q < 1 || p.sign() <= 0 || q.sign() <= 0 || Rational(P) * p + Rational(Q) * q != Rational(1))
    throw std::domain_error("verify_decomposition needs positive p, q with Pp + Qq = 1");
  const auto c = cr_coefficients(m);
  Rational rhs(0);
  for (int r = 0; 2 * r <= m; ++r)
    rhs += c[static_cast<std::size_t>(r)] * nmr(m, r, p, P, q, Q);
  return multipart_density({P, Q}, {p, q}, m) == rhs;
}

Rational maclaurin_gap(const std::vector<Rational> &xs, int k) {
  const int n = static_cast<int>(xs.size());
  if (k < 1 || k > n)
    throw std::domain_error("maclaurin_gap needs 1 <= k <= |xs|");
  // e_0..e_k by the usual recurrence.
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
  e[0] = Rational(1);
  Rational sum(0);
  for (const auto &x : xs) {
    sum += x;
    for (int j = k; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * x;
  }
  const Rational mean = sum / Rational(n);
  return Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * pow(mean, static_cast<unsigned>(k)) -
         e[static_cast<std::size_t>(k)];
}

std::string lemma_name(Lemma l) {
  switch (l) {
  case Lemma::flip_vertex:
    return "P3-1";
  case Lemma::move_vertex:
    return "P3-2";
  case Lemma::average_pair:
    return "P3-3";
  case Lemma::not_applicable:
    break;
  }
  return "not applicable";
}

bool LemmaReport::all_strict() const {
  return applicable() && std::all_of(rows.begin(), rows.end(), [](const LemmaRow &r) { return r.strict(); });
}

LemmaReport lemma_inequality_suite(int P, int Q, const Rational &p, const Rational &q, int m_max) {
  if (P < 1 || Q < 1 || p.sign() <= 0 || q.sign() <= 0 || Rational(P) * p + Rational(Q) * q != Rational(1))
    throw std::domain_error("lemma_inequality_suite needs positive p, q with Pp + Qq = 1");
  LemmaReport rep;
  rep.P = P;
  rep.Q = Q;
  rep.p = p;
  rep.q = q;
  if (rep.P < rep.Q) {
    std::swap(rep.P, rep.Q);
    std::swap(rep.p, rep.q);
  }
  const int PP = rep.P, QQ = rep.Q;
  const Rational &pp = rep.p, &qq = rep.q;

  WeightedGraph original = multipart_graph({PP, QQ}, {pp, qq});
  WeightedGraph modified;
  if (PP >= QQ + 1 && Rational(PP - 1) * pp > Rational(QQ) * qq) {
    rep.lemma = Lemma::flip_vertex;
    modified = original;
    const Rational three_halves(3, 2);
    for (Vertex v = 1; v < original.order(); ++v)
      modified.set_edge(0, v, three_halves - original.weight(0, v));
  } else if (PP >= QQ + 2) {
    rep.lemma = Lemma::move_vertex;
    modified = multipart_graph({PP - 1, QQ + 1}, {Rational(PP) * pp / Rational(PP - 1), Rational(QQ) * qq / Rational(QQ + 1)});
  } else if (PP == QQ && pp != qq) {
    rep.lemma = Lemma::average_pair;
    modified = original;
    const Rational mid = (pp + qq) / Rational(2);
    modified.set_vertex_weight(0, mid);
    modified.set_vertex_weight(static_cast<Vertex>(PP), mid);
  } else {
    return rep;
  }
  for (int m = 2; m <= std::min(m_max, PP + QQ); ++m)
    rep.rows.push_back({m, ks_density(original, static_cast<std::size_t>(m)), ks_density(modified, static_cast<std::size_t>(m))});
  rep.original = std::move(original);
  rep.modified = std::move(modified);
  return rep;
}

} // namespace rtd
