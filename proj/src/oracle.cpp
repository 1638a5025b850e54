#include "cactus/oracle.hpp"

#include <algorithm>
#include <string>

#include "cactus/kernels.hpp"

namespace cactus {

namespace {

using kernels::Mask;

void check_ceiling(const Graph& g, const OracleConfig& config) {
  if (config.max_vertices > 64) throw std::invalid_argument("oracle ceiling cannot exceed 64 vertices");
  if (g.n_vertices() > config.max_vertices) {
    throw ResourceLimitError("graph has " + std::to_string(g.n_vertices()) +
                             " vertices, oracle ceiling is " + std::to_string(config.max_vertices));
  }
}

bool use_scan(const Graph& g, const OracleConfig& config) {
  switch (config.strategy) {
    case OracleStrategy::subset_scan:
      if (g.n_vertices() > static_cast<std::size_t>(kernels::kMaxScanVertices)) {
        throw ResourceLimitError("subset scan limited to " + std::to_string(kernels::kMaxScanVertices) +
                                 " vertices");
      }
      return true;
    case OracleStrategy::pivot:
      return false;
    case OracleStrategy::automatic:
      break;
  }
  return g.n_vertices() <= config.scan_max_vertices &&
         g.n_vertices() <= static_cast<std::size_t>(kernels::kMaxScanVertices);
}

kernels::MisTally tally(const Graph& g, const OracleConfig& config, Mask probe) {
  check_ceiling(g, config);
  const auto adj = g.adjacency_masks();
  if (use_scan(g, config)) {
    return config.parallel ? kernels::scan_parallel(adj, probe) : kernels::scan_serial(adj, probe);
  }
  return config.parallel ? kernels::pivot_parallel(adj, probe) : kernels::pivot_serial(adj, probe);
}

}  // namespace

BigCount count_ids(const Graph& g, const OracleConfig& config) { return BigCount(tally(g, config, 0).count); }

void for_each_mis(const Graph& g, const std::function<void(const VertexSet&)>& visit, const OracleConfig& config) {
  check_ceiling(g, config);
  const auto adj = g.adjacency_masks();
  const std::size_t n = g.n_vertices();
  if (use_scan(g, config)) {
    kernels::scan_visit(adj, [&](Mask m) { visit(VertexSet::from_mask(n, m)); });
    return;
  }
  std::vector<Mask> found;
  kernels::pivot_visit(adj, [&](Mask m) { found.push_back(m); });
  std::sort(found.begin(), found.end());
  for (Mask m : found) visit(VertexSet::from_mask(n, m));
}

std::vector<VertexSet> enumerate_mis(const Graph& g, const OracleConfig& config) {
  std::vector<VertexSet> out;
  for_each_mis(g, [&](const VertexSet& s) { out.push_back(s); }, config);
  return out;
}

std::size_t independent_domination_number(const Graph& g, const OracleConfig& config) {
  const auto t = tally(g, config, 0);
  return t.count == 0 ? 0 : static_cast<std::size_t>(t.min_size);
}

BoundaryClasses count_boundary_classes(const Graph& g, Vertex v, const OracleConfig& config) {
  if (v >= g.n_vertices()) throw std::out_of_range("boundary vertex outside graph");
  const auto whole = tally(g, config, Mask{1} << v);

  // Extendable sets are the maximal independent sets of G - v that avoid N(v).
  Mask probe = 0;
  for (Vertex w : g.neighbors(v).members()) probe |= Mask{1} << (w > v ? w - 1 : w);
  const auto rest = tally(g.without_vertex(v), config, probe);

  return {BigCount(whole.hits), BigCount(whole.count - whole.hits), BigCount(rest.count - rest.hits)};
}

}  // namespace cactus
