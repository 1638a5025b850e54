#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cactus/bigint.hpp"
#include "cactus/graph.hpp"

namespace cactus {

/// Thrown when a graph exceeds the brute-force ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OracleStrategy { automatic, subset_scan, pivot };

struct OracleConfig {
  /// Graphs up to this many vertices are scanned subset by subset; larger ones use pivoting.
  std::size_t scan_max_vertices = 24;
  /// Hard ceiling on the vertex count of any oracle query.
  std::size_t max_vertices = 40;
  /// Use the OpenMP kernels. Results never depend on this.
  bool parallel = true;
  OracleStrategy strategy = OracleStrategy::automatic;
};

/// Number of maximal independent sets (= independent dominating sets). The empty graph counts 1.
BigCount count_ids(const Graph& g, const OracleConfig& config = {});

/// Every maximal independent set, in increasing bitset order.
std::vector<VertexSet> enumerate_mis(const Graph& g, const OracleConfig& config = {});

/// Streams maximal independent sets in increasing bitset order.
void for_each_mis(const Graph& g, const std::function<void(const VertexSet&)>& visit,
                  const OracleConfig& config = {});

std::size_t independent_domination_number(const Graph& g, const OracleConfig& config = {});

/// Oracle counts of the three terminal-vertex classes used by the transfer systems.
struct BoundaryClasses {
  BigCount contains;    // maximal independent sets containing v
  BigCount avoids;      // maximal independent sets not containing v
  BigCount extendable;  // independent S, v not in S, N[S] = V \ {v}

  friend bool operator==(const BoundaryClasses&, const BoundaryClasses&) = default;
};

BoundaryClasses count_boundary_classes(const Graph& g, Vertex v, const OracleConfig& config = {});

}  // namespace cactus
