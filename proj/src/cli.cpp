#include "cactus/cli.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "cactus/chains.hpp"
#include "cactus/genfunc.hpp"
#include "cactus/oracle.hpp"
#include "cactus/transfer.hpp"
#include "cactus/verify.hpp"

namespace cactus::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultOracleVertices = 26;
constexpr std::size_t kMaxOracleVertices = 40;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t oracle_max_vertices = kDefaultOracleVertices;
  int threads = 0;

  std::string family;
  std::optional<int> n;
  std::optional<int> m;
  int max_n = 10;
  std::string method;
  std::string gf_source = "derived";
  std::string source = "derived";
  std::string format = "text";
  std::string report = "markdown";
  int n_max_symbolic = 30;
  int defect_max = 3;
};

OracleConfig oracle_config(const Options& o) {
  OracleConfig c;
  c.max_vertices = o.oracle_max_vertices;
  c.scan_max_vertices = std::min<std::size_t>(c.scan_max_vertices, o.oracle_max_vertices);
  return c;
}

Family require_family(const Options& o) {
  auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  return *f;
}

Family require_uniform(const Options& o) {
  const Family f = require_family(o);
  if (is_defect(f)) throw UsageError(o.family + " is a defect chain; use --m and --n with build, count or defect");
  return f;
}

ChainSpec require_spec(const Options& o) {
  const Family f = require_family(o);
  if (is_defect(f)) {
    if (!o.m || !o.n) throw UsageError(o.family + " needs --m and --n");
    return ChainSpec::defect(f, *o.m, *o.n);
  }
  if (!o.n) throw UsageError("--n is required");
  return ChainSpec::uniform(f, *o.n);
}

std::string default_method(Family f) { return is_defect(f) ? "oracle" : "transfer"; }

struct CountResult {
  BigInt value;
  std::optional<std::string> warning;
};

// Printed closed forms are claims; a disagreement with the transfer system is reported, not hidden.
std::optional<std::string> compare_with_transfer(const TransferSystem& sys, int n, const BigInt& value,
                                                 const std::string& what, const std::string& claim) {
  const BigInt reference = run_transfer(sys, n);
  if (reference == value) return std::nullopt;
  return what + " gives " + value.str() + " at n=" + std::to_string(n) + " but the transfer system gives " +
         reference.str() + " (see claim " + claim + ")";
}

CountResult count_uniform(Family f, int n, const std::string& method, const Options& o) {
  const auto cfg = oracle_config(o);
  const std::string flag(family_flag(f));
  if (method == "oracle") return {count_ids(build_chain(ChainSpec::uniform(f, n)).graph, cfg), {}};
  const auto sys = paper_transfer_system(f, cfg);
  if (method == "transfer") return {run_transfer(sys, n), {}};
  if (method == "recurrence") {
    const BigInt v = eval_recurrence(paper_recurrence(f), n);
    return {v, compare_with_transfer(sys, n, v, "the printed recurrence", flag + ".recurrence")};
  }
  if (method == "gf") {
    if (o.gf_source == "derived") return {gf_integer_coefficients(derived_gf(sys), n)[static_cast<std::size_t>(n)], {}};
    const auto c = gf_coefficients(paper_gf(f), n)[static_cast<std::size_t>(n)];
    if (boost::multiprecision::denominator(c) != 1) {
      throw UsageError("printed generating function has non-integer coefficient " + to_string(c) + " at n=" + std::to_string(n));
    }
    const BigInt v = boost::multiprecision::numerator(c);
    return {v, compare_with_transfer(sys, n, v, "the printed generating function", flag + ".gf")};
  }
  if (method == "formula") throw UsageError("--method formula applies to p-defect and s-defect");
  throw UsageError("unknown method '" + method + "'");
}

CountResult count_spec(const ChainSpec& spec, const std::string& method, const Options& o) {
  if (!is_defect(spec.family)) return count_uniform(spec.family, spec.length, method, o);
  if (method == "oracle") return {count_ids(build_chain(spec).graph, oracle_config(o)), {}};
  if (method == "formula") {
    const auto kind = spec.family == Family::para_chain_ortho_defect ? DefectKind::ortho_defect : DefectKind::para_defect;
    auto status = check_defect_formula(kind, spec.m, spec.n, oracle_config(o));
    std::optional<std::string> warning;
    if (status.verdict == Verdict::refuted) {
      warning = "printed formula gives " + status.claimed_value->str() + " but the oracle gives " +
                status.oracle_value->str() + " (see claim " + status.claim.id + ")";
    }
    return {*status.claimed_value, warning};
  }
  throw UsageError("defect chains support --method oracle or formula");
}

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) throw UsageError("unsupported --format '" + format + "'");
}

int cmd_build(const Options& o, std::ostream& out) {
  check_format(o.format, {"edgelist", "json", "text"});
  const auto chain = build_chain(require_spec(o));
  if (o.format == "json") {
    out << to_json(chain).dump() << "\n";
  } else {
    out << to_edge_list(chain);
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format, {"text", "json"});
  const auto spec = require_spec(o);
  const std::string method = o.method.empty() ? default_method(spec.family) : o.method;
  const auto result = count_spec(spec, method, o);
  if (result.warning) err << "warning: " << *result.warning << "\n";
  if (o.format == "json") {
    json j{{"family", o.family}, {"method", method}, {"count", result.value.str()}};
    if (is_defect(spec.family)) {
      j["m"] = spec.m;
      j["n"] = spec.n;
    } else {
      j["n"] = spec.length;
    }
    if (method == "gf") j["gf_source"] = o.gf_source;
    j["warning"] = result.warning ? json(*result.warning) : json(nullptr);
    out << j.dump() << "\n";
  } else {
    out << result.value << "\n";
  }
  return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out, std::ostream& err) {
  check_format(o.format, {"text", "csv", "json"});
  const Family f = require_uniform(o);
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  const std::string method = o.method.empty() ? default_method(f) : o.method;
  std::vector<BigInt> values;
  for (int n = 1; n <= o.max_n; ++n) {
    auto r = count_uniform(f, n, method, o);
    if (r.warning) err << "warning: " << *r.warning << "\n";
    values.push_back(std::move(r.value));
  }
  if (o.format == "json") {
    json counts = json::array();
    for (const auto& v : values) counts.push_back(v.str());
    out << json{{"family", o.family}, {"method", method}, {"first_n", 1}, {"counts", counts}}.dump() << "\n";
  } else if (o.format == "csv") {
    out << "n,count\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << "," << values[i] << "\n";
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << " " << values[i] << "\n";
  }
  return kExitOk;
}

int cmd_gf(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  const Family f = require_uniform(o);
  if (o.source != "paper" && o.source != "derived") throw UsageError("--source must be paper or derived");
  const RationalGF gf = o.source == "paper" ? paper_gf(f) : derived_gf(paper_transfer_system(f, oracle_config(o)));
  if (o.format == "json") {
    json j = gf.to_json();
    j["family"] = o.family;
    j["source"] = o.source;
    out << j.dump() << "\n";
  } else {
    out << gf.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_gamma(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  const Family f = require_uniform(o);
  const auto cfg = oracle_config(o);
  const int last = std::min(o.max_n, max_oracle_length(f, cfg.max_vertices));
  if (last < o.max_n) throw ResourceLimitError("length " + std::to_string(o.max_n) + " exceeds the oracle ceiling");
  const bool has_formula = f == Family::triangular || f == Family::hex_ortho || f == Family::hex_meta;
  json rows = json::array();
  if (o.format == "text") out << "n gamma_i formula\n";
  for (int n = 1; n <= last; ++n) {
    const auto gamma = independent_domination_number(build_chain(ChainSpec::uniform(f, n)).graph, cfg);
    std::optional<int> formula;
    if (has_formula) formula = f == Family::triangular ? (n + 1) / 2 : (3 * n + 1) / 2;
    if (o.format == "json") {
      rows.push_back({{"n", n}, {"gamma_i", gamma}, {"formula", formula ? json(*formula) : json(nullptr)}});
    } else {
      out << n << " " << gamma << " " << (formula ? std::to_string(*formula) : "-") << "\n";
    }
  }
  if (o.format == "json") out << json{{"family", o.family}, {"rows", rows}}.dump() << "\n";
  return kExitOk;
}

int cmd_defect(const Options& o, std::ostream& out) {
  check_format(o.format, {"text", "json"});
  const Family f = require_family(o);
  if (!is_defect(f)) throw UsageError("defect needs --family p-defect or s-defect");
  if (!o.m || !o.n) throw UsageError("defect needs --m and --n");
  const auto kind = f == Family::para_chain_ortho_defect ? DefectKind::ortho_defect : DefectKind::para_defect;
  const auto s = check_defect_formula(kind, *o.m, *o.n, oracle_config(o));
  if (o.format == "json") {
    VerificationReport r;
    r.claims.push_back(s);
    r.oracle_ceiling = o.oracle_max_vertices;
    out << report_json(std::span(&r, 1))["claims"][0].dump() << "\n";
  } else {
    out << "formula " << (s.claimed_value ? s.claimed_value->str() : "-") << "\n";
    out << "oracle " << (s.oracle_value ? s.oracle_value->str() : "-") << "\n";
    out << "verdict " << to_string(s.verdict) << "\n";
    if (s.corrected) out << "corrected " << *s.corrected << "\n";
    if (!s.note.empty()) out << "note " << s.note << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::string report = o.report;
  if (o.format == "json") report = "json";
  if (report != "json" && report != "markdown") throw UsageError("--report must be json or markdown");
  VerifyConfig cfg;
  cfg.oracle = oracle_config(o);
  cfg.n_max_symbolic = o.n_max_symbolic;
  cfg.defect_max = o.defect_max;
  const auto result = verify_all(cfg);
  out << errata_report(std::span(&result, 1), report == "json" ? ReportFormat::json : ReportFormat::markdown);
  return result.summary().refuted > 0 ? kExitRefuted : kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts of independent dominating sets in chain cacti"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--oracle-max-vertices", o.oracle_max_vertices, "Largest graph the brute-force oracle accepts")
      ->check(CLI::Range(std::size_t{1}, kMaxOracleVertices));
  app.add_option("--threads", o.threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);

  const std::string families = "tri, sq-para, sq-ortho, hex-ortho, hex-meta, hex-para, p-defect, s-defect";
  auto family_opt = [&](CLI::App* sub) { sub->add_option("--family", o.family, families)->required(); };

  auto* build = app.add_subcommand("build", "Emit a chain as an edge list or JSON");
  family_opt(build);
  build->add_option("--n", o.n, "Chain length, or blocks after the defect");
  build->add_option("--m", o.m, "Blocks before the defect");
  build->add_option("--format", o.format, "edgelist or json")->default_str("edgelist");

  auto* count = app.add_subcommand("count", "Count independent dominating sets");
  family_opt(count);
  count->add_option("--n", o.n, "Chain length, or blocks after the defect");
  count->add_option("--m", o.m, "Blocks before the defect");
  count->add_option("--method", o.method, "oracle, transfer, recurrence, gf or formula");
  count->add_option("--gf-source", o.gf_source, "derived or paper")->check(CLI::IsMember({"derived", "paper"}));
  count->add_option("--format", o.format, "text or json");

  auto* sequence = app.add_subcommand("sequence", "Counts for lengths 1..max-n");
  family_opt(sequence);
  sequence->add_option("--max-n", o.max_n, "Last length")->required();
  sequence->add_option("--method", o.method, "oracle, transfer, recurrence or gf");
  sequence->add_option("--gf-source", o.gf_source, "derived or paper")->check(CLI::IsMember({"derived", "paper"}));
  sequence->add_option("--format", o.format, "text, csv or json");

  auto* gf = app.add_subcommand("gf", "Print a generating function");
  family_opt(gf);
  gf->add_option("--source", o.source, "derived or paper");
  gf->add_option("--format", o.format, "text or json");

  auto* gamma = app.add_subcommand("gamma", "Independence domination numbers against the closed formula");
  family_opt(gamma);
  gamma->add_option("--max-n", o.max_n, "Last length");
  gamma->add_option("--format", o.format, "text or json");

  auto* defect = app.add_subcommand("defect", "Defect-chain formula against the oracle");
  family_opt(defect);
  defect->add_option("--m", o.m, "Blocks before the defect")->required();
  defect->add_option("--n", o.n, "Blocks after the defect")->required();
  defect->add_option("--format", o.format, "text or json");

  auto* verify = app.add_subcommand("verify", "Check every registered claim and print the errata report");
  verify->add_option("--report", o.report, "json or markdown");
  verify->add_option("--format", o.format, "json selects the JSON report");
  verify->add_option("--oracle-max", o.oracle_max_vertices, "Alias of --oracle-max-vertices")
      ->check(CLI::Range(std::size_t{1}, kMaxOracleVertices));
  verify->add_option("--n-max-symbolic", o.n_max_symbolic, "Last length for symbolic comparisons")->check(CLI::PositiveNumber);
  verify->add_option("--defect-max", o.defect_max, "Largest m and n for defect chains")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  if (build->parsed() && o.format == "text") o.format = "edgelist";

  try {
    if (build->parsed()) return cmd_build(o, out);
    if (count->parsed()) return cmd_count(o, out, err);
    if (sequence->parsed()) return cmd_sequence(o, out, err);
    if (gf->parsed()) return cmd_gf(o, out);
    if (gamma->parsed()) return cmd_gamma(o, out);
    if (defect->parsed()) return cmd_defect(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run(args, out, err);
}

}  // namespace cactus::cli
