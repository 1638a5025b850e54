#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cactus/bigint.hpp"
#include "cactus/chains.hpp"
#include "cactus/polynomial.hpp"
#include "cactus/transfer.hpp"

namespace cactus {

/// Element of Q(x) kept as a reduced quotient of integer polynomials: no common polynomial
/// factor, no common integer content, and the lowest nonzero denominator coefficient positive.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Ordinary generating function num/den with den(0) != 0, stored reduced.
class RationalGF {
 public:
  /// Throws std::domain_error when the reduced denominator has a zero constant term.
  RationalGF(Polynomial num, Polynomial den);
  explicit RationalGF(const RationalFunction& f);

  const Polynomial& numerator() const { return f_.numerator(); }
  const Polynomial& denominator() const { return f_.denominator(); }
  const RationalFunction& function() const { return f_; }

  /// "(c0 + c1x + ...)/(d0 + d1x + ...)"
  std::string to_string() const;
  /// {"num": [...], "den": [...]}, coefficients as decimal strings.
  nlohmann::json to_json() const;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;

 private:
  RationalFunction f_;
};

class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// matrix * unknowns = rhs over Q(x).
struct GFLinearSystem {
  std::vector<std::vector<Polynomial>> matrix;
  std::vector<Polynomial> rhs;
};

/// Gaussian elimination over Q(x) with reduction after every operation.
std::vector<RationalGF> solve_gf_system(const GFLinearSystem& sys);

/// Power-series coefficients 0..upto. Non-integer values are kept as they are.
std::vector<BigRational> gf_coefficients(const RationalGF& gf, int upto);
/// As gf_coefficients, but throws std::domain_error on a non-integer coefficient.
std::vector<BigInt> gf_integer_coefficients(const RationalGF& gf, int upto);

/// GF whose expansion is zero below first_index and follows rec from there.
/// Throws std::invalid_argument when rec cannot supply terms first_index..first_index+k-1.
RationalGF gf_from_recurrence(const LinearRecurrence& rec, int first_index);

/// Coefficients from the denominator, valid from deg(num)+1. Needs den(0) = 1.
LinearRecurrence recurrence_from_gf(const RationalGF& gf);

/// The printed family generating function, verbatim.
RationalGF paper_gf(Family family);

/// Printed per-state generating functions X_i(x) = sum_{n>=0} x_i(n+1) x^n, in the
/// transfer-system state order. Empty when none are printed.
std::vector<RationalGF> paper_state_gfs(Family family);

struct PrintedGFSystem {
  GFLinearSystem system;
  /// State index of each unknown.
  std::vector<std::size_t> unknown_states;
};

/// The printed linear system for the state generating functions, when there is one.
std::optional<PrintedGFSystem> paper_gf_system(Family family);

/// (I - xA) X = initial for a transfer system.
GFLinearSystem transfer_gf_system(const TransferSystem& sys);

/// Per-state GFs of a transfer system, by solving transfer_gf_system.
std::vector<RationalGF> derived_state_gfs(const TransferSystem& sys);

/// sum_{n>=1} count_n x^n for a transfer system.
RationalGF derived_gf(const TransferSystem& sys);

struct GrowthEstimate {
  /// Largest-modulus root when it is real.
  std::optional<long double> dominant_root;
  /// Modulus of the largest root, real or not.
  long double dominant_modulus = 0;
  /// x_{n+1} / x_n at the requested n, when defined.
  std::optional<long double> empirical_ratio;
};

/// Dominant root of the characteristic polynomial, refined to 1e-12 relative.
GrowthEstimate dominant_growth_rate(const LinearRecurrence& rec, int ratio_at = 50);

}  // namespace cactus
