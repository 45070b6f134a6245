#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rtd/rational.hpp"

namespace rtd {

using Vertex = std::size_t;

// Fixed-size bitset over vertex indices, sized at construction.
class VertexBits {
public:
  VertexBits() = default;
  explicit VertexBits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::size_t count() const;
  bool none() const;
  // Smallest member; size() when empty.
  Vertex first() const;
  std::vector<Vertex> members() const;

  VertexBits &operator&=(const VertexBits &o);
  VertexBits &operator|=(const VertexBits &o);
  VertexBits &subtract(const VertexBits &o);
  friend VertexBits operator&(VertexBits a, const VertexBits &b) { return a &= b; }
  friend bool operator==(const VertexBits &, const VertexBits &) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Undirected simple graph (no loops) with bitset adjacency rows.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n);

  std::size_t order() const { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  void add_edge(Vertex u, Vertex v);
  const VertexBits &neighbours(Vertex v) const { return rows_[v]; }
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  SimpleGraph induced(std::span<const Vertex> vertices) const;
  SimpleGraph complement() const;

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph cycle(std::size_t n);

private:
  std::vector<VertexBits> rows_;
};

// Sorted set of vertex indices of some host graph.
class VertexSubset {
public:
  VertexSubset() = default;
  VertexSubset(std::vector<Vertex> members);
  VertexSubset(std::initializer_list<Vertex> members) : VertexSubset(std::vector<Vertex>(members)) {}

  const std::vector<Vertex> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  bool valid_for(std::size_t n) const { return members_.empty() || members_.back() < n; }

  friend bool operator==(const VertexSubset &, const VertexSubset &) = default;
  friend auto operator<=>(const VertexSubset &, const VertexSubset &) = default;

private:
  std::vector<Vertex> members_;
};

} // namespace rtd
