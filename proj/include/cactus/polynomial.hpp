#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cactus/bigint.hpp"

namespace cactus {

/// Dense univariate polynomial over the integers. Index i holds the coefficient of x^i;
/// trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<BigInt> coefficients);
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial constant(const BigInt& c);
  static Polynomial monomial(const BigInt& c, int power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  BigInt operator[](int power) const;
  const BigInt& leading() const;
  /// Lowest-degree nonzero coefficient.
  const BigInt& trailing() const;

  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  Polynomial primitive_part() const;
  Polynomial truncated(int max_degree) const;
  Polynomial derivative() const;
  /// Every coefficient must be divisible; throws std::domain_error otherwise.
  Polynomial divided_by(const BigInt& c) const;

  long double evaluate(long double x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const BigInt& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// "1 - 3x - x^2 - 2x^3"
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

enum class PolyOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

/// lc(b)^(deg a - deg b + 1) * a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Exact quotient a / b over the integers; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Primitive gcd with positive leading coefficient, by the subresultant remainder sequence.
/// gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace cactus
