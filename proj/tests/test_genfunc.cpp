#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cactus/genfunc.hpp"

using namespace cactus;

namespace {

std::vector<BigInt> ints(const std::vector<BigRational>& v) {
  std::vector<BigInt> out;
  for (const auto& r : v) {
    REQUIRE(boost::multiprecision::denominator(r) == 1);
    out.push_back(boost::multiprecision::numerator(r));
  }
  return out;
}

}  // namespace

TEST_CASE("rational function reduction") {
  const RationalFunction f(Polynomial{2, 2}, Polynomial{4, 0, -4});  // 2(1+x) / 4(1-x)(1+x)
  CHECK(f.numerator() == Polynomial{1});
  CHECK(f.denominator() == Polynomial{2, -2});
  const RationalFunction g(Polynomial{1}, Polynomial{-1, 1});
  CHECK(g.denominator() == Polynomial{1, -1});
  CHECK(g.numerator() == Polynomial{-1});
  CHECK((f - f).is_zero());
  CHECK(f * RationalFunction(Polynomial{2, -2}) == RationalFunction(Polynomial{1}));
}

TEST_CASE("rational gf needs an invertible denominator") {
  CHECK_THROWS_AS(RationalGF(Polynomial{1}, Polynomial{0, 1}), std::domain_error);
  CHECK_NOTHROW(RationalGF(Polynomial{0, 1}, Polynomial{0, 1, 1}));  // reduces to 1/(1+x)
}

TEST_CASE("coefficients") {
  CHECK(ints(gf_coefficients(paper_gf(Family::square_ortho), 4)) == std::vector<BigInt>{1, 2, 4, 8, 16});
  CHECK(ints(gf_coefficients(paper_gf(Family::square_para), 3)) == std::vector<BigInt>{1, 2, 4, 7});
  CHECK(ints(gf_coefficients(paper_gf(Family::triangular), 3)) == std::vector<BigInt>{0, 1, 2, 3});

  const auto half = gf_coefficients(RationalGF(Polynomial{1}, Polynomial{2, -1}), 2);
  CHECK(half[0] == BigRational(1, 2));
  CHECK(half[2] == BigRational(1, 8));
  CHECK_THROWS_AS(gf_integer_coefficients(RationalGF(Polynomial{1}, Polynomial{2, -1}), 2), std::domain_error);
}

TEST_CASE("printed closed forms") {
  CHECK(paper_gf(Family::triangular).to_string() == "(x + x^2)/(1 - x - x^2)");
  CHECK(paper_gf(Family::hex_para).to_string() == "(1 - x - 5x^3 + x^4)/(1 - 6x + 9x^2 - 6x^3 + x^4)");
  CHECK(paper_gf(Family::square_para).to_string() == "(1 + x^2)/(1 - 2x + x^2 - x^3)");
  const auto j = paper_gf(Family::hex_meta).to_json();
  CHECK(j["num"] == nlohmann::json::array({"1", "-1", "2"}));
  CHECK(j["den"] == nlohmann::json::array({"1", "-3", "-1", "-2"}));
}

TEST_CASE("gf_from_recurrence") {
  LinearRecurrence t;
  t.coefficients = {1, 1};
  t.initial_terms = {{1, 3}, {2, 5}};
  CHECK(gf_from_recurrence(t, 1) == RationalGF(Polynomial{0, 3, 2}, Polynomial{1, -1, -1}));

  LinearRecurrence s;
  s.coefficients = {2};
  s.initial_terms = {{1, 2}};
  CHECK(gf_from_recurrence(s, 1) == RationalGF(Polynomial{0, 2}, Polynomial{1, -2}));

  LinearRecurrence o;
  o.coefficients = {3, 3};
  o.initial_terms = {{1, 5}, {2, 19}};
  CHECK(gf_from_recurrence(o, 1) == RationalGF(Polynomial{0, 5, 4}, Polynomial{1, -3, -3}));

  LinearRecurrence short_rec;
  short_rec.coefficients = {1, 1};
  short_rec.initial_terms = {{1, 3}};
  CHECK_THROWS_AS(gf_from_recurrence(short_rec, 1), std::invalid_argument);
}

TEST_CASE("recurrence_from_gf") {
  const auto o = recurrence_from_gf(paper_gf(Family::hex_ortho));
  CHECK(o.coefficients == std::vector<BigInt>{3, 3});
  CHECK(o.valid_from == 3);

  const auto l = recurrence_from_gf(paper_gf(Family::hex_para));
  CHECK(l.coefficients == std::vector<BigInt>{6, -9, 6, -1});
  CHECK(l.valid_from == 5);

  const auto s = recurrence_from_gf(RationalGF(Polynomial{1}, Polynomial{1, -2}));
  CHECK(s.coefficients == std::vector<BigInt>{2});
  CHECK(s.valid_from == 1);
  CHECK(eval_recurrence(s, 6) == 64);
}

TEST_CASE("round trip on random recurrences") {
  std::mt19937_64 rng(314159);
  std::uniform_int_distribution<int> order(1, 4);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> init(-20, 20);
  int checked = 0;
  while (checked < 100) {
    LinearRecurrence rec;
    const int k = order(rng);
    for (int i = 0; i < k; ++i) rec.coefficients.emplace_back(coef(rng));
    if (rec.coefficients.back() == 0) continue;
    const int first = static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) rec.initial_terms[first + i] = init(rng);

    const RationalGF gf = gf_from_recurrence(rec, first);
    // A common factor would lower the order; such draws are not round-trippable by construction.
    if (gf.denominator().degree() != k) continue;
    ++checked;
    const auto back = recurrence_from_gf(gf);
    CHECK(back.coefficients == rec.coefficients);
    const auto series = ints(gf_coefficients(gf, first + k + 10));
    for (int n = first; n <= first + k + 10; ++n) CHECK(series[static_cast<std::size_t>(n)] == eval_recurrence(rec, n));
  }
}

TEST_CASE("solving the printed triangular system") {
  const auto printed = paper_gf_system(Family::triangular);
  REQUIRE(printed);
  CHECK(printed->unknown_states == std::vector<std::size_t>{1, 0});
  const auto sol = solve_gf_system(printed->system);
  CHECK(sol[0] == RationalGF(Polynomial{1}, Polynomial{1, -1, -1}));  // T''
  CHECK(sol[1] == RationalGF(Polynomial{0, 1}, Polynomial{1, -1, -1}));  // T'
}

TEST_CASE("solving the printed square para system") {
  const auto printed = paper_gf_system(Family::square_para);
  REQUIRE(printed);
  const auto sol = solve_gf_system(printed->system);
  const auto states = paper_state_gfs(Family::square_para);
  REQUIRE(sol.size() == 3);
  for (std::size_t k = 0; k < sol.size(); ++k) CHECK(sol[k] == states[printed->unknown_states[k]]);
  CHECK(states[1] == RationalGF(Polynomial{1}, Polynomial{1, -2, 1, -1}));
}

TEST_CASE("linear systems") {
  const GFLinearSystem identity{{{Polynomial{1}, Polynomial{}}, {Polynomial{}, Polynomial{1}}},
                                {Polynomial{2, 3}, Polynomial{0, 1}}};
  const auto sol = solve_gf_system(identity);
  CHECK(sol[0] == RationalGF(Polynomial{2, 3}, Polynomial{1}));
  CHECK(sol[1] == RationalGF(Polynomial{0, 1}, Polynomial{1}));

  const GFLinearSystem singular{{{Polynomial{1, 1}, Polynomial{2, 2}}, {Polynomial{1}, Polynomial{2}}},
                                {Polynomial{1}, Polynomial{1}}};
  CHECK_THROWS_AS(solve_gf_system(singular), SingularSystemError);
}

TEST_CASE("derived state generating functions match the trajectories") {
  for (Family f : kUniformFamilies) {
    CAPTURE(family_flag(f));
    const auto sys = paper_transfer_system(f);
    const auto traj = state_trajectory(sys, 30);
    const auto gfs = derived_state_gfs(sys);
    for (std::size_t i = 0; i < gfs.size(); ++i) {
      const auto c = gf_integer_coefficients(gfs[i], 29);
      for (int n = 1; n <= 30; ++n) CHECK(c[static_cast<std::size_t>(n - 1)] == traj[static_cast<std::size_t>(n - 1)][i]);
    }
    const auto total = gf_integer_coefficients(derived_gf(sys), 30);
    CHECK(total[0] == 0);
    for (int n = 1; n <= 30; ++n) CHECK(total[static_cast<std::size_t>(n)] == run_transfer(sys, n));
  }
}

TEST_CASE("corrected closed forms") {
  CHECK(derived_gf(paper_transfer_system(Family::triangular)) == RationalGF(Polynomial{0, 3, 2}, Polynomial{1, -1, -1}));
  CHECK(derived_gf(paper_transfer_system(Family::hex_meta)) ==
        RationalGF(Polynomial{0, 5, 4, 2}, Polynomial{1, -3, -1, -2}));
  CHECK(derived_gf(paper_transfer_system(Family::hex_para)) ==
        RationalGF(Polynomial{0, 5, -6, 1}, Polynomial{1, -5, 4, -1}));
  CHECK(derived_gf(paper_transfer_system(Family::hex_ortho)) == RationalGF(Polynomial{0, 5, 4}, Polynomial{1, -3, -3}));
}

TEST_CASE("dominant growth rate") {
  const long double phi = std::numbers::phi_v<long double>;
  const auto t = dominant_growth_rate(paper_recurrence(Family::triangular), 50);
  REQUIRE(t.dominant_root);
  CHECK(std::fabs(*t.dominant_root - phi) < 1e-12L);
  REQUIRE(t.empirical_ratio);
  CHECK(std::fabs(*t.empirical_ratio - phi) < 1e-9L);

  const auto s = dominant_growth_rate(paper_recurrence(Family::square_ortho));
  CHECK(std::fabs(*s.dominant_root - 2.0L) < 1e-12L);

  const auto o = dominant_growth_rate(paper_recurrence(Family::hex_ortho));
  CHECK(std::fabs(*o.dominant_root - (3.0L + std::sqrt(21.0L)) / 2.0L) < 1e-12L);

  // x_n = -x_{n-2}: roots +-i, no real dominant root.
  LinearRecurrence rot;
  rot.coefficients = {0, -1};
  rot.initial_terms = {{0, 1}, {1, 0}};
  const auto r = dominant_growth_rate(rot, 10);
  CHECK_FALSE(r.dominant_root.has_value());
  CHECK(r.dominant_modulus == doctest::Approx(1.0));
}

TEST_CASE("empirical ratio tracks the dominant root for every family") {
  for (Family f : kUniformFamilies) {
    CAPTURE(family_flag(f));
    const auto sys = paper_transfer_system(f);
    const auto rec = recurrence_from_gf(derived_gf(sys));
    const auto est = dominant_growth_rate(rec, 50);
    REQUIRE(est.dominant_root);
    REQUIRE(est.empirical_ratio);
    CHECK(std::fabs(*est.empirical_ratio - *est.dominant_root) < 1e-9L * *est.dominant_root);
  }
}
