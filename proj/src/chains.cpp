#include "cactus/chains.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace cactus {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view flag;
  char symbol;
  int cycle;
  int offset;
};

constexpr std::array<FamilyInfo, 8> kFamilies{{
    {Family::triangular, "tri", 't', 3, 1},
    {Family::square_para, "sq-para", 'q', 4, 2},
    {Family::square_ortho, "sq-ortho", 's', 4, 1},
    {Family::hex_ortho, "hex-ortho", 'o', 6, 1},
    {Family::hex_meta, "hex-meta", 'm', 6, 2},
    {Family::hex_para, "hex-para", 'l', 6, 3},
    // Defect chains: offset of the surrounding chain; the defect block uses the other one.
    {Family::para_chain_ortho_defect, "p-defect", 'p', 4, 2},
    {Family::ortho_chain_para_defect, "s-defect", 's', 4, 1},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw std::invalid_argument("unknown family");
}

int block_offset(const ChainSpec& spec, int block) {
  const int base = info(spec.family).offset;
  if (is_defect(spec.family) && block == spec.m) return base == 2 ? 1 : 2;
  return base;
}

}  // namespace

bool is_defect(Family f) {
  return f == Family::para_chain_ortho_defect || f == Family::ortho_chain_para_defect;
}

std::string_view family_flag(Family f) { return info(f).flag; }

std::optional<Family> parse_family(std::string_view flag) {
  for (const auto& i : kFamilies)
    if (i.flag == flag) return i.family;
  return std::nullopt;
}

char family_symbol(Family f) { return info(f).symbol; }
int cycle_length(Family f) { return info(f).cycle; }
int exit_offset(Family f) { return info(f).offset; }

ChainSpec ChainSpec::uniform(Family f, int length) {
  ChainSpec s;
  s.family = f;
  s.length = length;
  s.validate();
  return s;
}

ChainSpec ChainSpec::defect(Family f, int m, int n) {
  ChainSpec s;
  s.family = f;
  s.length = 0;
  s.m = m;
  s.n = n;
  s.validate();
  return s;
}

int ChainSpec::block_count() const { return is_defect(family) ? m + n + 1 : length; }

void ChainSpec::validate() const {
  if (is_defect(family)) {
    if (m < 1 || n < 1) throw std::invalid_argument("defect chains need m >= 1 and n >= 1");
  } else if (length < 1) {
    throw std::invalid_argument("chain length must be at least 1");
  }
}

std::string ChainSpec::describe() const {
  std::string out(family_flag(family));
  if (is_defect(family)) return out + "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")";
  return out + "(" + std::to_string(length) + ")";
}

std::size_t expected_vertex_count(const ChainSpec& spec) {
  spec.validate();
  return static_cast<std::size_t>(spec.block_count()) * static_cast<std::size_t>(cycle_length(spec.family) - 1) + 1;
}

LabeledChain build_chain(const ChainSpec& spec) {
  spec.validate();
  const int k = cycle_length(spec.family);
  const int blocks = spec.block_count();

  LabeledChain chain;
  std::vector<Edge> edges;
  Vertex next = 1;
  Vertex entry = 0;
  for (int b = 0; b < blocks; ++b) {
    std::vector<Vertex> cyc{entry};
    for (int i = 1; i < k; ++i) cyc.push_back(next++);
    for (int i = 0; i < k; ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % k]);
    const Vertex exit = cyc[static_cast<std::size_t>(block_offset(spec, b))];
    if (b + 1 < blocks) chain.cut_vertices.push_back(exit);
    chain.blocks.push_back(std::move(cyc));
    entry = exit;
  }
  chain.terminal_vertex = entry;
  if (is_defect(spec.family)) chain.defect_block = static_cast<std::size_t>(spec.m);
  chain.graph = Graph(next, edges);
  return chain;
}

bool is_cactus(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n == 0) return false;

  // DFS tree; every back edge closes a cycle whose tree edges get marked. A second mark on any
  // tree edge means two cycles share it.
  std::vector<int> parent(n, -1), depth(n, -1);
  std::vector<int> marks(n, 0);  // marks[v]: uses of the tree edge (v, parent[v])
  std::vector<Vertex> stack{0};
  depth[0] = 0;
  std::vector<Vertex> order;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : g.neighbors(v).members()) {
      if (depth[w] != -1) continue;
      depth[w] = depth[v] + 1;
      parent[w] = static_cast<int>(v);
      stack.push_back(w);
    }
  }
  if (order.size() != n) return false;

  for (auto [u, v] : g.edges()) {
    if (parent[u] == static_cast<int>(v) || parent[v] == static_cast<int>(u)) continue;
    // Non-tree edge: walk both ends up to their common ancestor.
    Vertex a = u, b = v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      if (++marks[a] > 1) return false;
      a = static_cast<Vertex>(parent[a]);
    }
  }
  return true;
}

}  // namespace cactus
