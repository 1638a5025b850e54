#include "cactus/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace cactus {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }

void check_member(const VertexSet& s, std::size_t n) {
  if (s.universe() <= n) return;
  for (Vertex v : s.members()) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of " + std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet s(universe);
  if (universe < kWordBits && (mask >> universe) != 0) throw std::out_of_range("mask exceeds universe");
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  if (v >= universe_) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside set universe");
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::uint64_t VertexSet::mask() const { return words_.empty() ? 0 : words_[0]; }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) {
    universe_ = other.universe_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  const std::size_t n = std::max(a.words_.size(), b.words_.size());
  for (std::size_t i = n; i-- > 0;) {
    const auto wa = i < a.words_.size() ? a.words_[i] : 0;
    const auto wb = i < b.words_.size() ? b.words_[i] : 0;
    if (wa != wb) return wa <=> wb;
  }
  return std::strong_ordering::equal;
}

Graph::Graph(std::size_t n_vertices, std::span<const Edge> edges)
    : adjacency_(n_vertices, VertexSet(n_vertices)) {
  for (auto [u, v] : edges) {
    if (u >= n_vertices || v >= n_vertices) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside graph");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacency_[u].contains(v)) continue;
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++n_edges_;
  }
}

Graph::Graph(std::size_t n_vertices, std::initializer_list<Edge> edges)
    : Graph(n_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph(n, e);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= n_vertices()) throw std::out_of_range("vertex " + std::to_string(v) + " outside graph");
  return adjacency_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(n_edges_);
  for (Vertex u = 0; u < n_vertices(); ++u)
    for (Vertex v : adjacency_[u].members())
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_vertices() > kWordBits) throw std::length_error("graph too large for 64-bit masks");
  std::vector<std::uint64_t> out(n_vertices());
  for (std::size_t v = 0; v < n_vertices(); ++v) out[v] = adjacency_[v].mask();
  return out;
}

Graph Graph::without_vertex(Vertex removed) const {
  if (removed >= n_vertices()) throw std::out_of_range("vertex outside graph");
  auto relabel = [removed](Vertex v) { return v > removed ? v - 1 : v; };
  std::vector<Edge> kept;
  for (auto [u, v] : edges())
    if (u != removed && v != removed) kept.emplace_back(relabel(u), relabel(v));
  return Graph(n_vertices() - 1, kept);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  check_member(s, g.n_vertices());
  VertexSet out(g.n_vertices());
  for (Vertex v : s.members()) {
    out.insert(v);
    out |= g.neighbors(v);
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_member(s, g.n_vertices());
  const auto members = s.members();
  for (Vertex v : members) {
    VertexSet hit = g.neighbors(v);
    hit &= s;
    if (!hit.empty()) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  return closed_neighborhood(g, s).size() == g.n_vertices();
}

bool is_independent_dominating(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && is_dominating(g, s);
}

namespace {

// Color refinement: start from degrees and repeatedly hash in the multiset of neighbor colors.
// Colors are canonical across both graphs because they come from a shared signature table.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
  const std::size_t n = a.n_vertices();
  std::vector<int> ca(n), cb(n);
  for (Vertex v = 0; v < n; ++v) {
    ca[v] = static_cast<int>(a.degree(v));
    cb[v] = static_cast<int>(b.degree(v));
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> table;
    auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig{c[v]};
      std::vector<int> nb;
      for (Vertex w : g.neighbors(v).members()) nb.push_back(c[w]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (Vertex v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      table.emplace(sa[v], 0);
      table.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    std::vector<int> na(n), nb(n);
    for (Vertex v = 0; v < n; ++v) {
      na[v] = table[sa[v]];
      nb[v] = table[sb[v]];
    }
    const bool stable = std::set<int>(na.begin(), na.end()).size() == std::set<int>(ca.begin(), ca.end()).size();
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.n_vertices();
  if (n != b.n_vertices() || a.n_edges() != b.n_edges()) return false;
  if (n == 0) return true;

  auto [ca, cb] = refine_colors(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  // Match a's vertices in BFS order so each new vertex has mapped neighbors to check against.
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (Vertex w : a.neighbors(order[head]).members()) {
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }

  constexpr Vertex kUnmapped = ~Vertex{0};
  std::vector<Vertex> map_ab(n, kUnmapped);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex u = order[k];
        ok = a.adjacent(u, v) == b.adjacent(map_ab[u], w);
      }
      if (!ok) continue;
      map_ab[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      map_ab[v] = kUnmapped;
    }
    return false;
  };
  return extend(0);
}

}  // namespace cactus
