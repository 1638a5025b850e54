#pragma once

#include <cstdint>
#include <functional>
#include <span>

// Brute-force maximal-independent-set kernels over 64-bit adjacency masks.
// Each strategy has a serial reference and an OpenMP variant; all four must agree.

namespace cactus::kernels {

using Mask = std::uint64_t;

struct MisTally {
  std::uint64_t count = 0;
  /// Sets meeting the probe mask.
  std::uint64_t hits = 0;
  /// Smallest set size seen; 64 when count == 0.
  int min_size = 64;

  friend bool operator==(const MisTally&, const MisTally&) = default;
};

/// Largest vertex count the subset scan accepts.
inline constexpr int kMaxScanVertices = 32;

MisTally scan_serial(std::span<const Mask> adjacency, Mask probe = 0);
MisTally scan_parallel(std::span<const Mask> adjacency, Mask probe = 0);

MisTally pivot_serial(std::span<const Mask> adjacency, Mask probe = 0);
MisTally pivot_parallel(std::span<const Mask> adjacency, Mask probe = 0);

/// Visits every maximal independent set (unordered) via pivoted enumeration.
void pivot_visit(std::span<const Mask> adjacency, const std::function<void(Mask)>& visit);

/// Visits every maximal independent set in increasing mask order via subset scan.
void scan_visit(std::span<const Mask> adjacency, const std::function<void(Mask)>& visit);

}  // namespace cactus::kernels
