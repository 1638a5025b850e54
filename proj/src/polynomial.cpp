#include "cactus/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace cactus {

namespace {

BigInt int_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt power(const BigInt& base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::string to_string(const BigRational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Polynomial::Polynomial(std::initializer_list<BigInt> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigInt& c, int power) {
  if (power < 0) throw std::invalid_argument("negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(power) + 1, 0);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt Polynomial::operator[](int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

const BigInt& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

const BigInt& Polynomial::trailing() const {
  for (const auto& c : coeffs_)
    if (c != 0) return c;
  throw std::domain_error("zero polynomial has no trailing coefficient");
}

BigInt Polynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) g = int_gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  return divided_by(content());
}

Polynomial Polynomial::truncated(int max_degree) const {
  if (max_degree < 0) return {};
  std::vector<BigInt> v(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(max_degree) + 1));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * static_cast<long long>(i));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::divided_by(const BigInt& c) const {
  if (c == 0) throw std::domain_error("division by zero");
  std::vector<BigInt> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) {
    if (a % c != 0) throw std::domain_error("coefficient not divisible");
    v.push_back(a / c);
  }
  return Polynomial(std::move(v));
}

long double Polynomial::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const BigInt& c, const Polynomial& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs_.size());
  for (const auto& a : p.coeffs_) v.push_back(c * a);
  return Polynomial(std::move(v));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return a + b;
    case PolyOp::sub:
      return a - b;
    case PolyOp::mul:
      return a * b;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree();
  const BigInt& lb = b.leading();
  Polynomial r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Polynomial shift = Polynomial::monomial(r.leading(), r.degree() - b.degree());
    r = lb * r - shift * b;
    ++steps;
  }
  return power(lb, delta + 1 - steps) * r;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial r = a;
  std::vector<BigInt> q(static_cast<std::size_t>(std::max(0, a.degree() - b.degree() + 1)), 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    if (r.leading() % b.leading() != 0) throw std::domain_error("polynomial division is not exact");
    const BigInt c = r.leading() / b.leading();
    const int shift = r.degree() - b.degree();
    q[static_cast<std::size_t>(shift)] = c;
    r = r - Polynomial::monomial(c, shift) * b;
  }
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return Polynomial(std::move(q));
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  Polynomial a = a_in, b = b_in;
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) {
    if (a.is_zero()) return {};
    Polynomial p = a.primitive_part();
    return p.leading() < 0 ? -p : p;
  }
  a = a.primitive_part();
  b = b.primitive_part();
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = Polynomial::constant(1);
      break;
    }
    a = b;
    b = r.divided_by(g * power(h, delta));
    g = a.leading();
    // h <- g^delta / h^(delta-1), exact by the subresultant theorem
    if (delta > 0) h = power(g, delta) / power(h, delta - 1);
  }
  Polynomial out = b.primitive_part();
  if (out.leading() < 0) out = -out;
  return out;
}

}  // namespace cactus
