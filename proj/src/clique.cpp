#include "rtd/clique.hpp"

#include <algorithm>
#include <numeric>

namespace rtd {

namespace {

struct CliqueSearch {
  const SimpleGraph &g;
  std::size_t target; // stop once a clique of this size is found
  std::vector<Vertex> current;
  std::vector<Vertex> best;

  void colour_order(const VertexBits &p, std::vector<Vertex> &order, std::vector<std::size_t> &colour) const {
    VertexBits uncoloured = p;
    std::size_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      VertexBits q = uncoloured;
      while (!q.none()) {
        const Vertex v = q.first();
        uncoloured.reset(v);
        q.reset(v);
        q.subtract(g.neighbours(v));
        order.push_back(v);
        colour.push_back(k);
      }
    }
  }

  void expand(VertexBits p) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    colour_order(p, order, colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (best.size() >= target || current.size() + colour[i] <= best.size())
        return;
      const Vertex v = order[i];
      current.push_back(v);
      VertexBits next = p & g.neighbours(v);
      if (next.none()) {
        if (current.size() > best.size())
          best = current;
      } else {
        expand(std::move(next));
      }
      current.pop_back();
      p.reset(v);
    }
  }
};

std::vector<Vertex> search_clique(const SimpleGraph &g, std::size_t target) {
  const std::size_t n = g.order();
  if (n == 0)
    return {};
  // Relabel by non-increasing degree; colouring then tends to give tight bounds.
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
    return g.neighbours(a).count() > g.neighbours(b).count();
  });
  const SimpleGraph h = g.induced(perm);

  CliqueSearch s{h, target, {}, {}};
  VertexBits all(n);
  for (Vertex v = 0; v < n; ++v)
    all.set(v);
  s.expand(all);

  std::vector<Vertex> out;
  out.reserve(s.best.size());
  for (Vertex v : s.best)
    out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void bron_kerbosch(const SimpleGraph &g, std::vector<Vertex> &r, VertexBits p, VertexBits x,
                   const std::function<void(const std::vector<Vertex> &)> &visit) {
  if (p.none() && x.none()) {
    std::vector<Vertex> sorted = r;
    std::sort(sorted.begin(), sorted.end());
    visit(sorted);
    return;
  }
  VertexBits px = p;
  px |= x;
  Vertex pivot = 0;
  std::size_t pivot_score = 0;
  bool have_pivot = false;
  for (Vertex u : px.members()) {
    const std::size_t score = (p & g.neighbours(u)).count();
    if (!have_pivot || score > pivot_score) {
      pivot = u;
      pivot_score = score;
      have_pivot = true;
    }
  }
  VertexBits candidates = p;
  candidates.subtract(g.neighbours(pivot));
  for (Vertex v : candidates.members()) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.neighbours(v), x & g.neighbours(v), visit);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

} // namespace

std::vector<Vertex> maximum_clique(const SimpleGraph &g) {
  return search_clique(g, g.order() + 1);
}

std::size_t clique_number(const SimpleGraph &g) { return maximum_clique(g).size(); }

std::size_t clique_number(const SimpleGraph &g, const std::vector<Vertex> &within) {
  return clique_number(g.induced(within));
}

bool has_clique_of_size(const SimpleGraph &g, std::size_t k) {
  if (k == 0)
    return true;
  return search_clique(g, k).size() >= k;
}

void for_each_maximal_clique(const SimpleGraph &g,
                             const std::function<void(const std::vector<Vertex> &)> &visit) {
  const std::size_t n = g.order();
  if (n == 0)
    return;
  VertexBits p(n);
  for (Vertex v = 0; v < n; ++v)
    p.set(v);
  std::vector<Vertex> r;
  bron_kerbosch(g, r, p, VertexBits(n), visit);
}

std::vector<Vertex> greedy_independent_set(const SimpleGraph &g) {
  const std::size_t n = g.order();
  VertexBits alive(n);
  for (Vertex v = 0; v < n; ++v)
    alive.set(v);
  std::vector<Vertex> out;
  while (!alive.none()) {
    Vertex pick = 0;
    std::size_t best_deg = n + 1;
    for (Vertex v : alive.members()) {
      const std::size_t d = (alive & g.neighbours(v)).count();
      if (d < best_deg) {
        best_deg = d;
        pick = v;
      }
    }
    out.push_back(pick);
    alive.reset(pick);
    alive.subtract(g.neighbours(pick));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> greedy_clique_cover(const SimpleGraph &g) {
  const std::size_t n = g.order();
  VertexBits unassigned(n);
  for (Vertex v = 0; v < n; ++v)
    unassigned.set(v);
  std::vector<std::vector<Vertex>> cover;
  while (!unassigned.none()) {
    std::vector<Vertex> clique;
    VertexBits common = unassigned;
    while (!common.none()) {
      // Extend by the candidate keeping the most remaining candidates.
      Vertex pick = 0;
      std::size_t best = 0;
      bool first = true;
      for (Vertex v : common.members()) {
        const std::size_t keep = (common & g.neighbours(v)).count();
        if (first || keep > best) {
          pick = v;
          best = keep;
          first = false;
        }
      }
      clique.push_back(pick);
      common &= g.neighbours(pick);
      unassigned.reset(pick);
    }
    std::sort(clique.begin(), clique.end());
    cover.push_back(std::move(clique));
  }
  return cover;
}

} // namespace rtd
