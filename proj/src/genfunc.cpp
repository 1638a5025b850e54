#include "cactus/genfunc.hpp"

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

Polynomial x_times(const Polynomial& p) { return Polynomial::monomial(1, 1) * p; }

// Shorthand for printed coefficient lists.
Polynomial P(std::initializer_list<BigInt> c) { return Polynomial(c); }

}  // namespace

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = divide_exact(num, g);
    den = divide_exact(den, g);
  }
  const BigInt c = int_gcd(num.content(), den.content());
  if (c > 1) {
    num = num.divided_by(c);
    den = den.divided_by(c);
  }
  if (den.trailing() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalGF::RationalGF(Polynomial num, Polynomial den) : RationalGF(RationalFunction(std::move(num), std::move(den))) {}

RationalGF::RationalGF(const RationalFunction& f) : f_(f) {
  if (f_.denominator()[0] == 0) throw std::domain_error("generating function denominator vanishes at x = 0");
}

std::string RationalGF::to_string() const {
  return "(" + numerator().to_string() + ")/(" + denominator().to_string() + ")";
}

nlohmann::json RationalGF::to_json() const {
  auto coeffs = [](const Polynomial& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
  };
  return {{"num", coeffs(numerator())}, {"den", coeffs(denominator())}};
}

std::vector<RationalGF> solve_gf_system(const GFLinearSystem& sys) {
  const std::size_t n = sys.matrix.size();
  if (sys.rhs.size() != n) throw std::invalid_argument("right-hand side does not match matrix size");
  std::vector<std::vector<RationalFunction>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sys.matrix[i].size() != n) throw std::invalid_argument("matrix is not square");
    for (const auto& p : sys.matrix[i]) a[i].emplace_back(p);
    a[i].emplace_back(sys.rhs[i]);
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularSystemError("generating-function system is singular");
    std::swap(a[col], a[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      const RationalFunction factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k <= n; ++k) a[row][k] = a[row][k] - factor * a[col][k];
    }
  }

  std::vector<RationalFunction> x(n);
  for (std::size_t i = n; i-- > 0;) {
    RationalFunction acc = a[i][n];
    for (std::size_t k = i + 1; k < n; ++k) acc = acc - a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }

  std::vector<RationalGF> out;
  out.reserve(n);
  for (const auto& f : x) out.emplace_back(f);
  return out;
}

std::vector<BigRational> gf_coefficients(const RationalGF& gf, int upto) {
  const Polynomial& num = gf.numerator();
  const Polynomial& den = gf.denominator();
  const BigInt d0 = den[0];
  std::vector<BigRational> c;
  c.reserve(static_cast<std::size_t>(std::max(upto + 1, 0)));
  for (int k = 0; k <= upto; ++k) {
    BigRational acc = num[k];
    for (int i = 1; i <= std::min(k, den.degree()); ++i) acc -= BigRational(den[i]) * c[static_cast<std::size_t>(k - i)];
    c.push_back(acc / d0);
  }
  return c;
}

std::vector<BigInt> gf_integer_coefficients(const RationalGF& gf, int upto) {
  std::vector<BigInt> out;
  for (const auto& c : gf_coefficients(gf, upto)) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw std::domain_error("generating function has non-integer coefficient " + to_string(c));
    }
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

RationalGF gf_from_recurrence(const LinearRecurrence& rec, int first_index) {
  if (first_index < 0) throw std::invalid_argument("first index must be nonnegative");
  const auto k = static_cast<int>(rec.order());
  if (k == 0) throw std::invalid_argument("recurrence of order 0");
  std::vector<BigInt> window;
  try {
    window = eval_recurrence_range(rec, first_index, first_index + k - 1);
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("insufficient initial terms: ") + e.what());
  }
  std::vector<BigInt> den{1};
  for (const auto& c : rec.coefficients) den.push_back(-c);
  std::vector<BigInt> series(static_cast<std::size_t>(first_index), 0);
  series.insert(series.end(), window.begin(), window.end());
  const Polynomial denominator(den);
  const Polynomial numerator = (Polynomial(series) * denominator).truncated(first_index + k - 1);
  return {numerator, denominator};
}

LinearRecurrence recurrence_from_gf(const RationalGF& gf) {
  const Polynomial& den = gf.denominator();
  if (den[0] != 1) throw std::domain_error("denominator constant term must be 1 for an integer recurrence");
  if (den.degree() < 1) throw std::domain_error("polynomial generating function has no recurrence");
  LinearRecurrence rec;
  for (int i = 1; i <= den.degree(); ++i) rec.coefficients.push_back(-den[i]);
  rec.valid_from = gf.numerator().degree() + 1;
  const int count = std::max(rec.valid_from, static_cast<int>(rec.order()));
  const auto terms = gf_integer_coefficients(gf, count - 1);
  for (int i = 0; i < count; ++i) rec.initial_terms[i] = terms[static_cast<std::size_t>(i)];
  return rec;
}

RationalGF paper_gf(Family family) {
  switch (family) {
    case Family::triangular:
      return {P({0, 1, 1}), P({1, -1, -1})};
    case Family::square_para:
      return {P({1, 0, 1}), P({1, -2, 1, -1})};  // (1-x)^2 - x^3
    case Family::square_ortho:
      return {P({1}), P({1, -2})};
    case Family::hex_ortho:
      return {P({1, 2, 1}), P({1, -3, -3})};
    case Family::hex_meta:
      return {P({1, -1, 2}), P({1, -3, -1, -2})};
    case Family::hex_para:
      return {P({1, -1, 0, -5, 1}), P({1, -6, 9, -6, 1})};
    default:
      throw std::invalid_argument("no printed generating function for defect chains");
  }
}

std::vector<RationalGF> paper_state_gfs(Family family) {
  switch (family) {
    case Family::triangular: {
      const Polynomial d = P({1, -1, -1});
      return {{P({0, 1}), d}, {P({1}), d}};
    }
    case Family::square_para: {
      const Polynomial d = P({1, -2, 1, -1});
      return {{P({1, 0, 1}), d}, {P({1}), d}, {P({1, -1, 1}), d}};
    }
    case Family::hex_ortho: {
      const Polynomial d = P({1, -3, -3});
      return {{P({2, 2}), d}, {P({3, 2}), d}, {P({1, 1}), d}};
    }
    case Family::hex_meta: {
      const Polynomial d = P({1, -3, -1, -2});
      return {{P({1, 1, 2}), d}, {P({1, 2}), d}, {P({1, -2}), d}};
    }
    case Family::hex_para: {
      const Polynomial d = P({1, -6, 9, -6, 1});
      return {{P({2, -4, -3, 1}), d}, {P({3, -5, 4, -1}), d}, {P({1, -2, 2}), d}};
    }
    default:
      return {};
  }
}

std::optional<PrintedGFSystem> paper_gf_system(Family family) {
  switch (family) {
    case Family::triangular:
      // unknowns (T'', T')
      return PrintedGFSystem{{{{P({1, -1}), P({0, -1})}, {P({0, -1}), P({1})}}, {P({1}), P({0})}}, {1, 0}};
    case Family::square_para:
      return PrintedGFSystem{{{{P({1, -1}), P({0, -1}), P({0})},
                               {P({0}), P({1, -1}), P({0, -1})},
                               {P({0, -1}), P({0}), P({1})}},
                              {P({1}), P({1}), P({1})}},
                             {0, 1, 2}};
    case Family::hex_ortho:
      return PrintedGFSystem{{{{P({1}), P({0, -2}), P({0, -2})},
                               {P({0, -2}), P({1, -2}), P({0, -1})},
                               {P({0}), P({0, -1}), P({1, -1})}},
                              {P({2}), P({3}), P({1})}},
                             {0, 1, 2}};
    case Family::hex_meta:
      // unknowns (M', M''), M''' eliminated
      return PrintedGFSystem{{{{P({1, -1, -1}), P({0, -2})}, {P({0, -1, -2}), P({1, -2})}}, {P({1, 1}), P({1, 2})}},
                             {0, 1}};
    case Family::hex_para:
      return PrintedGFSystem{{{{P({1, -1}), P({0, -1}), P({0, -1})},
                               {P({0, -1}), P({1, -3}), P({0, -2})},
                               {P({0}), P({0, -1}), P({1, -1})}},
                              {P({2}), P({3}), P({1})}},
                             {0, 1, 2}};
    default:
      return std::nullopt;
  }
}

GFLinearSystem transfer_gf_system(const TransferSystem& sys) {
  GFLinearSystem out;
  const std::size_t n = sys.states();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(Polynomial::constant(i == j ? 1 : 0) - Polynomial::monomial(sys.update[i][j], 1));
    }
    out.matrix.push_back(std::move(row));
    out.rhs.push_back(Polynomial::constant(sys.initial[i]));
  }
  return out;
}

std::vector<RationalGF> derived_state_gfs(const TransferSystem& sys) { return solve_gf_system(transfer_gf_system(sys)); }

RationalGF derived_gf(const TransferSystem& sys) {
  const auto states = derived_state_gfs(sys);
  RationalFunction total;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (sys.output_weights[i] != 0) total = total + RationalFunction(Polynomial::constant(sys.output_weights[i])) * states[i].function();
  }
  return RationalGF(RationalFunction(x_times(total.numerator()), total.denominator()));
}

}  // namespace cactus
