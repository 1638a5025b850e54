#include <doctest.h>

#include <set>

#include "cactus/verify.hpp"

using namespace cactus;

namespace {

const VerificationReport& full_report() {
  static const VerificationReport report = verify_all();
  return report;
}

const ClaimStatus& claim(const VerificationReport& r, std::string_view id) {
  const ClaimStatus* c = r.find(id);
  REQUIRE_MESSAGE(c != nullptr, "missing claim ", id);
  return *c;
}

}  // namespace

TEST_CASE("max oracle length") {
  CHECK(max_oracle_length(Family::hex_para, 26) == 5);
  CHECK(max_oracle_length(Family::triangular, 21) == 10);
  CHECK(max_oracle_length(Family::square_ortho, 3) == 0);
}

TEST_CASE("square para family is consistent") {
  const auto r = cross_check_family(Family::square_para, 5, 30);
  CHECK(r.summary().refuted == 0);
  CHECK(r.summary().unchecked == 0);
  CHECK(claim(r, "sq-para.gf").verdict == Verdict::confirmed);
  CHECK(claim(r, "sq-para.seed.q0").verdict == Verdict::formal_only);
}

TEST_CASE("triangular family") {
  const auto r = cross_check_family(Family::triangular, 6, 30);
  const auto& gf = claim(r, "tri.gf");
  CHECK(gf.verdict == Verdict::refuted);
  REQUIRE(gf.witness);
  CHECK(gf.witness->n == 1);
  CHECK(gf.claimed_value == BigInt(1));
  CHECK(gf.oracle_value == BigInt(3));
  REQUIRE(gf.corrected);
  CHECK(gf.corrected->find("(3x + 2x^2)/(1 - x - x^2)") != std::string::npos);
  CHECK(claim(r, "tri.recurrence").verdict == Verdict::confirmed);
  CHECK(claim(r, "tri.system").verdict == Verdict::confirmed);
  CHECK(claim(r, "tri.seed.t0").verdict == Verdict::formal_only);
  CHECK(claim(r, "tri.asymptotic.rate").verdict == Verdict::confirmed);
}

TEST_CASE("hex ortho family is consistent") {
  const auto r = cross_check_family(Family::hex_ortho, 4, 30);
  CHECK(r.summary().refuted == 0);
}

TEST_CASE("oracle ceiling is enforced") {
  OracleConfig small;
  small.max_vertices = 12;
  CHECK_THROWS_AS(cross_check_family(Family::hex_ortho, 3, 10, small), ResourceLimitError);
  CHECK_THROWS_AS(cross_check_family(Family::para_chain_ortho_defect, 1, 10), std::invalid_argument);
}

TEST_CASE("gamma formulas") {
  CHECK(check_gamma_formula(Family::triangular, 8).verdict == Verdict::confirmed);
  CHECK(check_gamma_formula(Family::hex_ortho, 1).verdict == Verdict::confirmed);
  CHECK(check_gamma_formula(Family::hex_meta, 4).verdict == Verdict::confirmed);
  CHECK_THROWS_AS(check_gamma_formula(Family::hex_para, 2), std::invalid_argument);
}

TEST_CASE("defect formulas") {
  const auto p11 = check_defect_formula(DefectKind::ortho_defect, 1, 1);
  CHECK(p11.verdict == Verdict::confirmed);
  CHECK(p11.claimed_value == BigInt(8));
  CHECK(p11.oracle_value == BigInt(8));

  const auto p21 = check_defect_formula(DefectKind::ortho_defect, 2, 1);
  CHECK(p21.claimed_value == BigInt(14));
  CHECK(p21.oracle_value == BigInt(14));

  const auto s11 = check_defect_formula(DefectKind::para_defect, 1, 1);
  CHECK(s11.verdict == Verdict::refuted);
  CHECK(s11.claimed_value == BigInt(6));
  CHECK(s11.oracle_value == BigInt(7));
  REQUIRE(s11.witness);
  CHECK(s11.witness->m == 1);
  CHECK(s11.note.find("no index shift") != std::string::npos);

  OracleConfig small;
  small.max_vertices = 12;
  CHECK(check_defect_formula(DefectKind::para_defect, 2, 2, small).verdict == Verdict::unchecked);
}

TEST_CASE("verify_all covers the registry exactly once") {
  const auto& r = full_report();
  const auto ids = registered_claim_ids(VerifyConfig{});
  REQUIRE(r.claims.size() == ids.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(r.claims[i].claim.id == ids[i]);
    CHECK(seen.insert(ids[i]).second);
  }
  CHECK(r.summary().unchecked == 0);
}

TEST_CASE("refuted claims carry witnesses and both values") {
  for (const auto& c : full_report().claims) {
    if (c.verdict != Verdict::refuted) continue;
    CAPTURE(c.claim.id);
    CHECK(c.witness.has_value());
    CHECK(c.oracle_value.has_value());
    CHECK(c.claimed_value.has_value());
  }
}

TEST_CASE("self-consistent closed forms are never refuted") {
  for (const char* prefix : {"sq-para.", "sq-ortho.", "hex-ortho."}) {
    for (const auto& c : full_report().claims) {
      if (c.claim.id.starts_with(prefix)) {
        CAPTURE(c.claim.id);
        CHECK(c.verdict != Verdict::refuted);
      }
    }
  }
}

TEST_CASE("verdicts do not depend on how far the check runs") {
  const auto short_run = cross_check_family(Family::hex_meta, 3, 12);
  const auto long_run = cross_check_family(Family::hex_meta, 5, 40);
  REQUIRE(short_run.claims.size() == long_run.claims.size());
  for (std::size_t i = 0; i < short_run.claims.size(); ++i) {
    CAPTURE(short_run.claims[i].claim.id);
    CHECK(short_run.claims[i].verdict == long_run.claims[i].verdict);
    if (short_run.claims[i].verdict == Verdict::refuted) {
      CHECK(short_run.claims[i].witness->n == long_run.claims[i].witness->n);
    }
  }
}

TEST_CASE("errata report") {
  const std::vector<VerificationReport> none;
  const auto empty = report_json(none);
  CHECK(empty["claims"].empty());
  CHECK(empty["summary"]["confirmed"] == 0);
  CHECK(empty["summary"]["refuted"] == 0);
  CHECK(errata_report(none, ReportFormat::markdown).find("None.") != std::string::npos);

  const std::vector<VerificationReport> consistent{cross_check_family(Family::square_ortho, 4, 10)};
  const auto doc = report_json(consistent);
  CHECK(doc["summary"]["refuted"] == 0);
  CHECK(doc["claims"].size() == consistent[0].claims.size());

  const std::vector<VerificationReport> tri{cross_check_family(Family::triangular, 4, 10)};
  const auto j = report_json(tri);
  bool found = false;
  for (const auto& c : j["claims"]) {
    if (c["id"] != "tri.gf") continue;
    found = true;
    CHECK(c["verdict"] == "refuted");
    CHECK(c["witness"]["n"] == 1);
    CHECK(c["claimed_value"] == "1");
    CHECK(c["oracle_value"] == "3");
    CHECK(c["corrected"].is_string());
  }
  CHECK(found);
  const auto md = errata_report(tri, ReportFormat::markdown);
  CHECK(md.find("### tri.gf") != std::string::npos);
  CHECK(errata_report(tri, ReportFormat::markdown) == md);
}
