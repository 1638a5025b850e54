#include <algorithm>
#include <sstream>

#include "cactus/verify.hpp"

namespace cactus {

namespace {

using nlohmann::json;

json optional_value(const std::optional<BigInt>& v) { return v ? json(v->str()) : json(nullptr); }

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json out = json::object();
  if (w->m) out["m"] = *w->m;
  out["n"] = w->n;
  return out;
}

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "-";
  if (w->m) return "m=" + std::to_string(*w->m) + ", n=" + std::to_string(w->n);
  return "n=" + std::to_string(w->n);
}

// Table cells may not contain a bare pipe.
std::string cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out.empty() ? "-" : out;
}

std::vector<const ClaimStatus*> merged(std::span<const VerificationReport> reports) {
  std::vector<const ClaimStatus*> out;
  for (const auto& r : reports)
    for (const auto& c : r.claims) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->claim.id < b->claim.id; });
  return out;
}

ReportSummary totals(const std::vector<const ClaimStatus*>& claims) {
  ReportSummary s;
  for (const auto* c : claims) {
    switch (c->verdict) {
      case Verdict::confirmed:
        ++s.confirmed;
        break;
      case Verdict::refuted:
        ++s.refuted;
        break;
      case Verdict::formal_only:
        ++s.formal_only;
        break;
      case Verdict::unchecked:
        ++s.unchecked;
        break;
    }
  }
  return s;
}

std::size_t ceiling(std::span<const VerificationReport> reports) {
  std::size_t out = 0;
  for (const auto& r : reports) out = std::max(out, r.oracle_ceiling);
  return out;
}

}  // namespace

json report_json(std::span<const VerificationReport> reports) {
  const auto claims = merged(reports);
  json list = json::array();
  for (const auto* c : claims) {
    list.push_back({
        {"id", c->claim.id},
        {"scope", c->claim.scope},
        {"kind", std::string(to_string(c->claim.kind))},
        {"location", c->claim.location},
        {"quote", c->claim.quote},
        {"verdict", std::string(to_string(c->verdict))},
        {"witness", witness_json(c->witness)},
        {"oracle_value", optional_value(c->oracle_value)},
        {"claimed_value", optional_value(c->claimed_value)},
        {"corrected", c->corrected ? json(*c->corrected) : json(nullptr)},
        {"note", c->note},
    });
  }
  const auto s = totals(claims);
  return {
      {"claims", std::move(list)},
      {"oracle_ceiling", ceiling(reports)},
      {"summary", {{"confirmed", s.confirmed}, {"refuted", s.refuted}, {"formal_only", s.formal_only}, {"unchecked", s.unchecked}}},
  };
}

std::string errata_report(std::span<const VerificationReport> reports, ReportFormat format) {
  if (format == ReportFormat::json) return report_json(reports).dump(2) + "\n";

  const auto claims = merged(reports);
  const auto s = totals(claims);
  std::ostringstream out;
  out << "# Verification report\n\n";
  out << "Oracle ceiling: " << ceiling(reports) << " vertices\n\n";
  out << "| confirmed | refuted | formal-only | unchecked |\n|---|---|---|---|\n";
  out << "| " << s.confirmed << " | " << s.refuted << " | " << s.formal_only << " | " << s.unchecked << " |\n\n";

  out << "## Errata\n\n";
  if (s.refuted == 0) out << "None.\n";
  for (const auto* c : claims) {
    if (c->verdict != Verdict::refuted) continue;
    out << "### " << c->claim.id << "\n\n";
    out << "- statement: " << c->claim.location << "\n";
    out << "- claimed: `" << c->claim.quote << "`\n";
    out << "- witness: " << witness_text(c->witness) << "; claimed value "
        << (c->claimed_value ? c->claimed_value->str() : "n/a") << ", reference value "
        << (c->oracle_value ? c->oracle_value->str() : "n/a") << "\n";
    if (c->corrected) out << "- corrected: `" << *c->corrected << "`\n";
    if (!c->note.empty()) out << "- note: " << c->note << "\n";
    out << "\n";
  }

  out << "\n## All claims\n\n";
  out << "| id | verdict | witness | claimed | reference |\n|---|---|---|---|---|\n";
  for (const auto* c : claims) {
    out << "| " << cell(c->claim.id) << " | " << to_string(c->verdict) << " | " << witness_text(c->witness) << " | "
        << (c->claimed_value ? c->claimed_value->str() : "-") << " | " << (c->oracle_value ? c->oracle_value->str() : "-")
        << " |\n";
  }
  return out.str();
}

}  // namespace cactus
