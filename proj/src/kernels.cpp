#include "cactus/kernels.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include <omp.h>

namespace cactus::kernels {

namespace {

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_size(std::size_t n, std::size_t limit) {
  if (n > limit) throw std::length_error("kernel input has too many vertices");
}

// Independent and dominating, in one pass over the members.
inline bool is_mis(std::span<const Mask> adj, Mask full, Mask set) {
  Mask cover = set;
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    const Mask nb = adj[static_cast<std::size_t>(std::countr_zero(rest))];
    if ((nb & set) != 0) return false;
    cover |= nb;
  }
  return cover == full;
}

inline void tally_set(MisTally& t, Mask set, Mask probe) {
  ++t.count;
  if ((set & probe) != 0) ++t.hits;
  t.min_size = std::min(t.min_size, std::popcount(set));
}

// Bron-Kerbosch with Tomita pivoting on the complement graph: maximal cliques there are
// exactly the maximal independent sets here.
class PivotSearch {
 public:
  explicit PivotSearch(std::span<const Mask> adj) : full_(full_mask(adj.size())), comp_(adj.size()) {
    for (std::size_t v = 0; v < adj.size(); ++v) comp_[v] = full_ & ~adj[v] & ~(Mask{1} << v);
  }

  Mask full() const { return full_; }
  Mask complement(int v) const { return comp_[static_cast<std::size_t>(v)]; }

  Mask pivot_neighbors(Mask p, Mask x) const {
    int best = -1;
    Mask chosen = 0;
    for (Mask rest = p | x; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int score = std::popcount(p & comp_[static_cast<std::size_t>(u)]);
      if (score > best) {
        best = score;
        chosen = comp_[static_cast<std::size_t>(u)];
      }
    }
    return chosen;
  }

  template <class Visit>
  void expand(Mask r, Mask p, Mask x, Visit& visit) const {
    if (p == 0) {
      if (x == 0) visit(r);
      return;
    }
    const Mask candidates = p & ~pivot_neighbors(p, x);
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask bit = Mask{1} << v;
      const Mask nb = comp_[static_cast<std::size_t>(v)];
      expand(r | bit, p & nb, x & nb, visit);
      p &= ~bit;
      x |= bit;
    }
  }

 private:
  Mask full_;
  std::vector<Mask> comp_;
};

struct RootBranch {
  int vertex;
  Mask p;
  Mask x;
};

// First level of the search tree, unrolled so branches can run independently.
std::vector<RootBranch> root_branches(const PivotSearch& search) {
  std::vector<RootBranch> out;
  Mask p = search.full();
  Mask x = 0;
  const Mask candidates = p & ~search.pivot_neighbors(p, x);
  for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const Mask nb = search.complement(v);
    out.push_back({v, p & nb, x & nb});
    p &= ~(Mask{1} << v);
    x |= Mask{1} << v;
  }
  return out;
}

}  // namespace

MisTally scan_serial(std::span<const Mask> adjacency, Mask probe) {
  check_size(adjacency.size(), kMaxScanVertices);
  const Mask full = full_mask(adjacency.size());
  MisTally t;
  for (Mask set = 0;; ++set) {
    if (is_mis(adjacency, full, set)) tally_set(t, set, probe);
    if (set == full) break;
  }
  return t;
}

MisTally scan_parallel(std::span<const Mask> adjacency, Mask probe) {
  check_size(adjacency.size(), kMaxScanVertices);
  const Mask full = full_mask(adjacency.size());
  const auto total = static_cast<long long>(full) + 1;
  std::uint64_t count = 0;
  std::uint64_t hits = 0;
  int min_size = 64;
#pragma omp parallel for schedule(static) reduction(+ : count, hits) reduction(min : min_size)
  for (long long i = 0; i < total; ++i) {
    const auto set = static_cast<Mask>(i);
    if (!is_mis(adjacency, full, set)) continue;
    ++count;
    if ((set & probe) != 0) ++hits;
    min_size = std::min(min_size, std::popcount(set));
  }
  return {count, hits, min_size};
}

MisTally pivot_serial(std::span<const Mask> adjacency, Mask probe) {
  check_size(adjacency.size(), 64);
  PivotSearch search(adjacency);
  MisTally t;
  auto visit = [&](Mask set) { tally_set(t, set, probe); };
  search.expand(0, search.full(), 0, visit);
  return t;
}

MisTally pivot_parallel(std::span<const Mask> adjacency, Mask probe) {
  check_size(adjacency.size(), 64);
  PivotSearch search(adjacency);
  if (adjacency.empty()) return pivot_serial(adjacency, probe);
  const auto branches = root_branches(search);
  std::uint64_t count = 0;
  std::uint64_t hits = 0;
  int min_size = 64;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : count, hits) reduction(min : min_size)
  for (std::size_t i = 0; i < branches.size(); ++i) {
    MisTally local;
    auto visit = [&](Mask set) { tally_set(local, set, probe); };
    const auto& b = branches[i];
    search.expand(Mask{1} << b.vertex, b.p, b.x, visit);
    count += local.count;
    hits += local.hits;
    min_size = std::min(min_size, local.min_size);
  }
  return {count, hits, min_size};
}

void pivot_visit(std::span<const Mask> adjacency, const std::function<void(Mask)>& visit) {
  check_size(adjacency.size(), 64);
  PivotSearch search(adjacency);
  search.expand(0, search.full(), 0, visit);
}

void scan_visit(std::span<const Mask> adjacency, const std::function<void(Mask)>& visit) {
  check_size(adjacency.size(), kMaxScanVertices);
  const Mask full = full_mask(adjacency.size());
  for (Mask set = 0;; ++set) {
    if (is_mis(adjacency, full, set)) visit(set);
    if (set == full) break;
  }
}

}  // namespace cactus::kernels
