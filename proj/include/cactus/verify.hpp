#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactus/bigint.hpp"
#include "cactus/chains.hpp"
#include "cactus/oracle.hpp"

namespace cactus {

enum class ClaimKind { gf, recurrence, initial_term, gamma_formula, defect_formula, asymptotic };
enum class Verdict { confirmed, refuted, formal_only, unchecked };

std::string_view to_string(ClaimKind kind);
std::string_view to_string(Verdict verdict);

/// One published quantitative statement.
struct Claim {
  std::string id;
  std::string scope;     // family flag, or "p-defect" / "s-defect"
  ClaimKind kind = ClaimKind::gf;
  std::string location;  // which statement, in words
  std::string quote;     // the claimed formula or values
};

struct Witness {
  int n = 0;
  std::optional<int> m;  // defect claims only
};

struct ClaimStatus {
  Claim claim;
  Verdict verdict = Verdict::unchecked;
  std::optional<Witness> witness;
  /// Ground truth at the witness (oracle, or the oracle-validated transfer system beyond reach).
  std::optional<BigInt> oracle_value;
  std::optional<BigInt> claimed_value;
  std::optional<std::string> corrected;
  std::string note;
};

struct ReportSummary {
  std::size_t confirmed = 0;
  std::size_t refuted = 0;
  std::size_t formal_only = 0;
  std::size_t unchecked = 0;
};

struct VerificationReport {
  std::vector<ClaimStatus> claims;
  std::size_t oracle_ceiling = 0;

  ReportSummary summary() const;
  const ClaimStatus* find(std::string_view id) const;
  void append(VerificationReport other);
  /// Stable order by claim id.
  void sort();
};

struct VerifyConfig {
  OracleConfig oracle{};
  int n_max_symbolic = 30;
  /// Defect chains are checked for 1 <= m, n <= defect_max (within the ceiling).
  int defect_max = 3;
};

/// Largest length whose chain fits under the vertex ceiling (0 when none does).
int max_oracle_length(Family family, std::size_t max_vertices);

/// Every published claim about a uniform family, except the defect formulas.
VerificationReport cross_check_family(Family family, int n_max_oracle, int n_max_symbolic,
                                      const OracleConfig& oracle = {});

/// Independence domination number formula against the oracle for n = 1..n_max.
ClaimStatus check_gamma_formula(Family family, int n_max, const OracleConfig& oracle = {});

enum class DefectKind { ortho_defect, para_defect };

/// ortho_defect: para-chain with one ortho block (p_mn); para_defect: ortho-chain with one para block (s_mn).
ClaimStatus check_defect_formula(DefectKind kind, int m, int n, const OracleConfig& oracle = {});

/// Ids of every registered claim for a configuration.
std::vector<std::string> registered_claim_ids(const VerifyConfig& config);

/// The whole suite: every registered claim exactly once, sorted by id.
VerificationReport verify_all(const VerifyConfig& config = {});

enum class ReportFormat { json, markdown };

nlohmann::json report_json(std::span<const VerificationReport> reports);
std::string errata_report(std::span<const VerificationReport> reports, ReportFormat format);

}  // namespace cactus
