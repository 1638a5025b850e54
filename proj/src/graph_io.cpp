#include <sstream>

#include "cactus/chains.hpp"

namespace cactus {

std::string to_edge_list(const LabeledChain& chain) {
  std::ostringstream out;
  out << "# vertices " << chain.graph.n_vertices() << " edges " << chain.graph.n_edges() << "\n";
  for (auto [u, v] : chain.graph.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

nlohmann::json to_json(const LabeledChain& chain) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : chain.graph.edges()) edges.push_back({u, v});
  nlohmann::json doc{
      {"n_vertices", chain.graph.n_vertices()},
      {"edges", edges},
      {"blocks", chain.blocks},
      {"cut_vertices", chain.cut_vertices},
      {"terminal_vertex", chain.terminal_vertex},
  };
  return doc;
}

}  // namespace cactus
