#include "rtd/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rtd {

std::size_t VertexBits::count() const {
  std::size_t c = 0;
  for (auto w : words_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexBits::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Vertex VertexBits::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return n_;
}

std::vector<Vertex> VertexBits::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexBits &VertexBits::operator&=(const VertexBits &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= o.words_[i];
  return *this;
}

VertexBits &VertexBits::operator|=(const VertexBits &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

VertexBits &VertexBits::subtract(const VertexBits &o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

SimpleGraph::SimpleGraph(std::size_t n) : rows_(n, VertexBits(n)) {}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  if (u == v)
    throw std::invalid_argument("simple graphs have no self-loops");
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto &r : rows_)
    c += r.count();
  return c / 2;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : rows_[u].members())
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> vertices) const {
  SimpleGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.add_edge(i, j);
  return g;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g(order());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (!adjacent(u, v))
        g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  SimpleGraph g(n);
  if (n < 3)
    throw std::invalid_argument("cycle needs at least 3 vertices");
  for (Vertex u = 0; u < n; ++u)
    g.add_edge(u, (u + 1) % n);
  return g;
}

VertexSubset::VertexSubset(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

} // namespace rtd
