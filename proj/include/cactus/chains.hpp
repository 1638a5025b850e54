#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactus/graph.hpp"

namespace cactus {

enum class Family {
  triangular,
  square_para,
  square_ortho,
  hex_ortho,
  hex_meta,
  hex_para,
  para_chain_ortho_defect,
  ortho_chain_para_defect,
};

/// The six families with a uniform block type.
inline constexpr Family kUniformFamilies[] = {Family::triangular, Family::square_para, Family::square_ortho,
                                              Family::hex_ortho,  Family::hex_meta,    Family::hex_para};

bool is_defect(Family f);

/// CLI spelling: tri, sq-para, sq-ortho, hex-ortho, hex-meta, hex-para, p-defect, s-defect.
std::string_view family_flag(Family f);
std::optional<Family> parse_family(std::string_view flag);

/// Symbol of the counting sequence (t, q, s, o, m, l; p and s for the defect chains).
char family_symbol(Family f);

/// Size of every block cycle.
int cycle_length(Family f);

/// Cycle distance from a block's entry cut vertex to its exit cut vertex.
int exit_offset(Family f);

struct ChainSpec {
  Family family = Family::triangular;
  int length = 1;  // uniform families
  int m = 0;       // defect families: blocks before the defect
  int n = 0;       // defect families: blocks after the defect

  static ChainSpec uniform(Family f, int length);
  static ChainSpec defect(Family f, int m, int n);

  int block_count() const;
  /// Throws std::invalid_argument.
  void validate() const;
  std::string describe() const;
};

struct LabeledChain {
  Graph graph;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
  Vertex terminal_vertex = 0;
  /// 0-based index of the defect block, for defect families.
  std::optional<std::size_t> defect_block;
};

LabeledChain build_chain(const ChainSpec& spec);
std::size_t expected_vertex_count(const ChainSpec& spec);

/// Connected, and no edge lies on more than one cycle.
bool is_cactus(const Graph& g);

/// "u v" lines, 0-based, with a '#' header comment.
std::string to_edge_list(const LabeledChain& chain);
nlohmann::json to_json(const LabeledChain& chain);

}  // namespace cactus
