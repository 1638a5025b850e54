#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cactus/bigint.hpp"
#include "cactus/chains.hpp"
#include "cactus/oracle.hpp"

namespace cactus {

using StateVector = std::vector<BigCount>;

/// Per-length state counts evolved by an integer matrix.
///
/// States classify independent sets by the terminal vertex: contains it, avoids it while
/// dominating it, or leaves it as the only undominated vertex ("extendable").
/// update[i][j] is how many times state j at length n feeds state i at length n+1.
struct TransferSystem {
  Family family = Family::triangular;
  std::vector<std::string> state_names;
  std::vector<std::vector<std::int64_t>> update;
  StateVector initial;
  std::vector<int> output_weights;
  /// True where the length-1 value was measured by the oracle instead of taken as printed.
  std::vector<bool> oracle_seeded;

  std::size_t states() const { return state_names.size(); }
};

/// The published system for a uniform family. Unpublished seeds are measured with
/// count_boundary_classes on the length-1 chain.
TransferSystem paper_transfer_system(Family family, const OracleConfig& config = {});

/// Count at length n (n >= 1).
BigCount run_transfer(const TransferSystem& sys, int n);

/// State vectors for lengths 1..n.
std::vector<StateVector> state_trajectory(const TransferSystem& sys, int n);

/// Boundary classes of the chain in state order (contains, avoids[, extendable]).
StateVector oracle_state_vector(const TransferSystem& sys, int n, const OracleConfig& config = {});

/// x_n = sum_i coefficients[i-1] * x_{n-i}.
struct LinearRecurrence {
  std::vector<BigInt> coefficients;
  std::map<int, BigInt> initial_terms;
  /// First index for which the recurrence is claimed.
  int valid_from = 1;
  /// Initial indices that correspond to no graph.
  std::set<int> formal_indices;

  std::size_t order() const { return coefficients.size(); }
  int first_index() const;
};

/// Published closed recurrence with every published initial term, formal ones included.
LinearRecurrence paper_recurrence(Family family);

/// Throws std::out_of_range below the first initial index or where a term cannot be derived.
BigInt eval_recurrence(const LinearRecurrence& rec, int n);

/// Terms for indices first..last inclusive.
std::vector<BigInt> eval_recurrence_range(const LinearRecurrence& rec, int first, int last);

}  // namespace cactus
