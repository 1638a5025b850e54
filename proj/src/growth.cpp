#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cactus/genfunc.hpp"

namespace cactus {

namespace {

// lambda^k - c_1 lambda^(k-1) - ... - c_k, index = power.
Polynomial characteristic_polynomial(const LinearRecurrence& rec) {
  const std::size_t k = rec.order();
  std::vector<BigInt> c(k + 1, 0);
  c[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) c[k - i] = -rec.coefficients[i - 1];
  return Polynomial(std::move(c));
}

std::vector<std::complex<double>> approximate_roots(const Polynomial& p) {
  const int k = p.degree();
  if (k < 1) return {};
  const long double lead = p.leading().convert_to<long double>();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
  for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < k; ++i) companion(i, k - 1) = static_cast<double>(-(p[i].convert_to<long double>() / lead));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < k; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

// Bisection on a sign-changing bracket around a simple root, then a Newton polish.
long double refine_root(const Polynomial& p, long double guess) {
  long double width = 1e-6L * std::max(1.0L, std::fabs(guess));
  long double lo = guess - width, hi = guess + width;
  for (int widen = 0; widen < 60 && std::signbit(p.evaluate(lo)) == std::signbit(p.evaluate(hi)); ++widen) {
    width *= 2;
    lo = guess - width;
    hi = guess + width;
  }
  if (std::signbit(p.evaluate(lo)) == std::signbit(p.evaluate(hi))) return guess;
  const bool lo_negative = std::signbit(p.evaluate(lo));
  for (int iter = 0; iter < 400 && hi - lo > 1e-16L * std::max(1.0L, std::fabs(lo)); ++iter) {
    const long double mid = lo + (hi - lo) / 2;
    if (std::signbit(p.evaluate(mid)) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  long double r = lo + (hi - lo) / 2;
  const Polynomial dp = p.derivative();
  for (int iter = 0; iter < 3; ++iter) {
    const long double slope = dp.evaluate(r);
    if (slope == 0) break;
    const long double next = r - p.evaluate(r) / slope;
    if (!(next >= lo && next <= hi)) break;
    r = next;
  }
  return r;
}

long double ratio_of(const BigInt& num, const BigInt& den) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  return (Float(num) / Float(den)).convert_to<long double>();
}

}  // namespace

GrowthEstimate dominant_growth_rate(const LinearRecurrence& rec, int ratio_at) {
  if (rec.order() < 1) throw std::invalid_argument("recurrence of order 0");
  const Polynomial chi = characteristic_polynomial(rec);
  // Roots of the squarefree part are simple, so a sign change brackets each real one.
  const Polynomial g = gcd(chi, chi.derivative());
  const Polynomial squarefree = g.degree() > 0 ? divide_exact(chi, g) : chi;

  GrowthEstimate est;
  const auto roots = approximate_roots(squarefree);
  double max_mod = 0;
  for (const auto& z : roots) max_mod = std::max(max_mod, std::abs(z));
  est.dominant_modulus = max_mod;

  const double tol = 1e-9 * std::max(1.0, max_mod);
  bool complex_dominant = false;
  std::optional<double> best_real;
  for (const auto& z : roots) {
    if (std::abs(z) < max_mod - tol) continue;
    if (std::fabs(z.imag()) > tol) {
      complex_dominant = true;
    } else if (!best_real || z.real() > *best_real) {
      best_real = z.real();
    }
  }
  if (!complex_dominant && best_real) {
    est.dominant_root = refine_root(squarefree, *best_real);
    est.dominant_modulus = std::fabs(*est.dominant_root);
  }

  if (ratio_at >= rec.first_index()) {
    const auto terms = eval_recurrence_range(rec, ratio_at, ratio_at + 1);
    if (terms[0] != 0) est.empirical_ratio = ratio_of(terms[1], terms[0]);
  }
  return est;
}

}  // namespace cactus
