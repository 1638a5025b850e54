#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cactus {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Membership bitset over vertex ids 0..universe-1.
///
/// Ordering compares the sets as unsigned binary numbers (bit v has weight 2^v), which is
/// the enumeration order used for maximal independent sets.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const;
  bool empty() const;
  std::vector<Vertex> members() const;

  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t mask() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);

  friend bool operator==(const VertexSet& a, const VertexSet& b);
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n_vertices-1.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops and std::out_of_range on bad ids.
  /// Repeated edges collapse to one.
  Graph(std::size_t n_vertices, std::span<const Edge> edges);
  Graph(std::size_t n_vertices, std::initializer_list<Edge> edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t n_vertices() const { return adjacency_.size(); }
  std::size_t n_edges() const { return n_edges_; }
  const VertexSet& neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Per-vertex neighbor masks. Throws std::length_error above 64 vertices.
  std::vector<std::uint64_t> adjacency_masks() const;

  /// Induced subgraph on every vertex except `removed`; ids above it shift down by one.
  Graph without_vertex(Vertex removed) const;

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t n_edges_ = 0;
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_independent_dominating(const Graph& g, const VertexSet& s);

/// Exact isomorphism test by degree-refined backtracking. Fine for the chain sizes used here.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace cactus
