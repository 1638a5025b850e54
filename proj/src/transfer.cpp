#include "cactus/transfer.hpp"

#include <optional>
#include <stdexcept>

namespace cactus {

namespace {

constexpr int kUnset = -1;

struct PrintedSystem {
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> update;
  std::vector<int> seeds;  // kUnset where no value is published
};

PrintedSystem printed_system(Family family) {
  switch (family) {
    case Family::triangular:
      // t'_{n+1} = t''_n ; t''_{n+1} = t'_n + t''_n
      return {{"contains", "avoids"}, {{0, 1}, {1, 1}}, {1, 2}};
    case Family::square_para:
      // q' = q' + q'' ; q'' = q'' + q''' ; q''' = q'
      return {{"contains", "avoids", "extendable"}, {{1, 1, 0}, {0, 1, 1}, {1, 0, 0}}, {1, 1, 1}};
    case Family::square_ortho:
      // s' = s'' + s''' ; s'' = s' + s'' ; s''' = s'' + s'''
      return {{"contains", "avoids", "extendable"}, {{0, 1, 1}, {1, 1, 0}, {0, 1, 1}}, {1, 1, kUnset}};
    case Family::hex_ortho:
      // o' = 2o'' + 2o''' ; o'' = 2o' + 2o'' + o''' ; o''' = o'' + o'''
      return {{"contains", "avoids", "extendable"}, {{0, 2, 2}, {2, 2, 1}, {0, 1, 1}}, {2, 3, kUnset}};
    case Family::hex_meta:
      // m' = m' + 2m'' + m''' ; m'' = m' + 2m'' + 2m''' ; m''' = m'
      return {{"contains", "avoids", "extendable"}, {{1, 2, 1}, {1, 2, 2}, {1, 0, 0}}, {2, 3, kUnset}};
    case Family::hex_para:
      // l' = l' + l'' + l''' ; l'' = l' + 3l'' + 2l''' ; l''' = l'' + l'''
      return {{"contains", "avoids", "extendable"}, {{1, 1, 1}, {1, 3, 2}, {0, 1, 1}}, {2, 3, kUnset}};
    default:
      throw std::invalid_argument("no transfer system for defect chains");
  }
}

StateVector step(const TransferSystem& sys, const StateVector& v) {
  StateVector out(sys.states(), 0);
  for (std::size_t i = 0; i < sys.states(); ++i)
    for (std::size_t j = 0; j < sys.states(); ++j)
      if (sys.update[i][j] != 0) out[i] += sys.update[i][j] * v[j];
  return out;
}

}  // namespace

TransferSystem paper_transfer_system(Family family, const OracleConfig& config) {
  auto printed = printed_system(family);
  TransferSystem sys;
  sys.family = family;
  sys.state_names = printed.names;
  sys.update = printed.update;
  sys.output_weights.assign(sys.states(), 0);
  sys.output_weights[0] = 1;
  sys.output_weights[1] = 1;

  std::optional<StateVector> measured;
  for (std::size_t i = 0; i < sys.states(); ++i) {
    if (printed.seeds[i] != kUnset) {
      sys.initial.emplace_back(printed.seeds[i]);
      sys.oracle_seeded.push_back(false);
      continue;
    }
    if (!measured) measured = oracle_state_vector(sys, 1, config);
    sys.initial.push_back((*measured)[i]);
    sys.oracle_seeded.push_back(true);
  }
  return sys;
}

std::vector<StateVector> state_trajectory(const TransferSystem& sys, int n) {
  if (n < 1) throw std::out_of_range("chain length must be at least 1");
  std::vector<StateVector> out{sys.initial};
  out.reserve(static_cast<std::size_t>(n));
  for (int len = 2; len <= n; ++len) out.push_back(step(sys, out.back()));
  return out;
}

BigCount run_transfer(const TransferSystem& sys, int n) {
  if (n < 1) throw std::out_of_range("chain length must be at least 1");
  StateVector v = sys.initial;
  for (int len = 2; len <= n; ++len) v = step(sys, v);
  BigCount total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) total += sys.output_weights[i] * v[i];
  return total;
}

StateVector oracle_state_vector(const TransferSystem& sys, int n, const OracleConfig& config) {
  const auto chain = build_chain(ChainSpec::uniform(sys.family, n));
  const auto classes = count_boundary_classes(chain.graph, chain.terminal_vertex, config);
  StateVector out{classes.contains, classes.avoids, classes.extendable};
  out.resize(sys.states());
  return out;
}

int LinearRecurrence::first_index() const {
  if (initial_terms.empty()) throw std::logic_error("recurrence has no initial terms");
  return initial_terms.begin()->first;
}

LinearRecurrence paper_recurrence(Family family) {
  LinearRecurrence r;
  switch (family) {
    case Family::triangular:
      r.coefficients = {1, 1};
      r.initial_terms = {{0, 2}, {1, 3}};
      r.formal_indices = {0};
      r.valid_from = 3;
      break;
    case Family::square_para:
      r.coefficients = {2, -1, 1};
      r.initial_terms = {{1, 2}, {2, 4}, {3, 7}};
      r.valid_from = 4;
      break;
    case Family::square_ortho:
      r.coefficients = {2};
      r.initial_terms = {{0, 1}};
      r.formal_indices = {0};
      r.valid_from = 1;
      break;
    case Family::hex_ortho:
      r.coefficients = {3, 3};
      r.initial_terms = {{1, 5}, {2, 19}};
      r.valid_from = 3;
      break;
    case Family::hex_meta:
      r.coefficients = {3, 1, 2};
      r.initial_terms = {{0, 1}, {1, 5}, {2, 19}};
      r.formal_indices = {0};
      r.valid_from = 3;
      break;
    case Family::hex_para:
      r.coefficients = {6, -9, 6, -1};
      r.initial_terms = {{0, 4}, {1, 5}, {2, 19}, {3, 76}};
      r.formal_indices = {0};
      r.valid_from = 4;
      break;
    default:
      throw std::invalid_argument("no closed recurrence for defect chains");
  }
  return r;
}

std::vector<BigInt> eval_recurrence_range(const LinearRecurrence& rec, int first, int last) {
  if (rec.coefficients.empty()) throw std::invalid_argument("recurrence of order 0");
  const int start = rec.first_index();
  if (first < start) {
    throw std::out_of_range("index " + std::to_string(first) + " below first initial index " + std::to_string(start));
  }
  const auto k = static_cast<int>(rec.order());
  std::vector<BigInt> terms;  // terms[i] is x_{start+i}
  for (int idx = start; idx <= last; ++idx) {
    if (auto it = rec.initial_terms.find(idx); it != rec.initial_terms.end()) {
      terms.push_back(it->second);
      continue;
    }
    if (idx - k < start) {
      throw std::out_of_range("x_" + std::to_string(idx) + " needs terms before the first initial index");
    }
    BigInt value = 0;
    for (int i = 1; i <= k; ++i) value += rec.coefficients[static_cast<std::size_t>(i - 1)] * terms[static_cast<std::size_t>(idx - i - start)];
    terms.push_back(std::move(value));
  }
  if (last < first) return {};
  return {terms.begin() + (first - start), terms.end()};
}

BigInt eval_recurrence(const LinearRecurrence& rec, int n) { return eval_recurrence_range(rec, n, n).front(); }

}  // namespace cactus
