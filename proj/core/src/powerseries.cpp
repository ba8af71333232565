#include "akzeta/powerseries.hpp"

#include <sstream>

#include "akzeta/harmonic_bell.hpp"

namespace akzeta {

using boost::multiprecision::abs;

PolyRat::PolyRat(const Rational& constant) : coeffs_{constant} { normalize(); }

PolyRat::PolyRat(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyRat PolyRat::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return PolyRat(std::move(coeffs));
}

void PolyRat::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyRat::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real PolyRat::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

PolyRat& PolyRat::operator+=(const PolyRat& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

PolyRat& PolyRat::operator-=(const PolyRat& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

PolyRat& PolyRat::operator*=(const PolyRat& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

PolyRat& PolyRat::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

PolyRat& PolyRat::operator/=(const Rational& c) {
  if (c == 0) throw DomainError("PolyRat: division by zero");
  for (auto& a : coeffs_) a /= c;
  return *this;
}

std::string PolyRat::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    const Rational mag = abs(c);
    if (k == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << 'x';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

RatSeries series_scale(const RatSeries& a, const Rational& c) {
  RatSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) out[i] = a[i] * c;
  return out;
}

RatSeries series_inverse(const RatSeries& a) {
  if (a[0] == 0) throw DomainError("series_inverse: constant term must be non-zero");
  const std::size_t m = a.order();
  RatSeries out(m);
  out[0] = Rational(1) / a[0];
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

RatSeries series_exp(const RatSeries& a) {
  if (a[0] != 0) throw DomainError("series_exp: constant term must be zero");
  const std::size_t m = a.order();
  RatSeries out(m);
  out[0] = 1;
  // E' = a' E  =>  n E_n = Σ_{k=1}^{n} k a_k E_{n-k}.
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<unsigned long>(k)) * a[k] * out[n - k];
    out[n] = acc / static_cast<unsigned long>(n);
  }
  return out;
}

RatSeries series_log(const RatSeries& a) {
  if (a[0] != 1) throw DomainError("series_log: constant term must be one");
  const std::size_t m = a.order();
  // L' = a'/a  =>  n L_n = n a_n - Σ_{k=1}^{n-1} k L_k a_{n-k}.
  RatSeries out(m);
  for (std::size_t n = 1; n <= m; ++n) {
    Rational acc = Rational(static_cast<unsigned long>(n)) * a[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<unsigned long>(k)) * out[k] * a[n - k];
    out[n] = acc / static_cast<unsigned long>(n);
  }
  return out;
}

RatSeries series_compose(const RatSeries& f, const RatSeries& g) {
  if (g[0] != 0) throw DomainError("series_compose: inner series must have zero constant term");
  if (f.order() != g.order()) throw DomainError("series_compose: order mismatch");
  const std::size_t m = f.order();
  RatSeries out(m);
  for (std::size_t k = m + 1; k-- > 0;) {
    out = series_mul(out, g);
    out[0] += f[k];
  }
  return out;
}

RatSeries series_shift_down(const RatSeries& a) {
  if (a[0] != 0) throw DomainError("series_shift_down: constant term must be zero");
  if (a.order() == 0) return RatSeries(0);
  RatSeries out(a.order() - 1);
  for (std::size_t i = 0; i < a.order(); ++i) out[i] = a[i + 1];
  return out;
}

RatSeries exp_linear(const Rational& c, std::size_t order) {
  RatSeries out(order);
  Rational term = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = term;
    term = term * c / static_cast<unsigned long>(k + 1);
  }
  return out;
}

std::vector<Rational> bernoulli_numbers(std::size_t max_index) {
  // Σ_{k=0}^{n} C(n+1, k) B_k = 0 for n ≥ 1.
  std::vector<Rational> b(max_index + 1, Rational(0));
  b[0] = 1;
  for (std::size_t n = 1; n <= max_index; ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += Rational(binomial(n + 1, k)) * b[k];
    b[n] = -acc / static_cast<unsigned long>(n + 1);
  }
  return b;
}

PolyRat bernoulli_polynomial(unsigned m) {
  const auto b = bernoulli_numbers(m);
  std::vector<Rational> coeffs(m + 1, Rational(0));
  for (unsigned k = 0; k <= m; ++k) coeffs[m - k] = Rational(binomial(m, k)) * b[k];
  return PolyRat(std::move(coeffs));
}

RatSeries li_series(const Composition& v, std::size_t order) {
  const std::size_t depth = v.depth();
  if (order < depth) throw DomainError("li_series: order must be at least the depth of v");
  // level[i][n] = Σ_{n_1<…<n_{i+1}=n} Π n_j^{-v_j}; prefix sums feed the next level.
  std::vector<Rational> level(order + 1, Rational(0));
  for (std::size_t n = 1; n <= order; ++n) level[n] = detail::inverse_power(Rational(static_cast<unsigned long>(n)), v[0]);
  for (std::size_t i = 1; i < depth; ++i) {
    std::vector<Rational> next(order + 1, Rational(0));
    Rational prefix = 0;
    for (std::size_t n = 1; n <= order; ++n) {
      next[n] = prefix * detail::inverse_power(Rational(static_cast<unsigned long>(n)), v[i]);
      prefix += level[n];
    }
    level = std::move(next);
  }
  return RatSeries(std::move(level), order);
}

std::vector<PolyRat> ak_bernoulli_polys(const Composition& v, const Rational& p, unsigned m_max) {
  if (p < 1) throw DomainError("ak_bernoulli_polys: p must satisfy p >= 1");
  const std::size_t order = m_max + v.depth() + 5;

  // w(t) = (1 - e^{-t})/p, zero constant term.
  RatSeries w = series_scale(exp_linear(Rational(-1), order), Rational(-1) / p);
  w[0] = 0;
  RatSeries g = series_compose(li_series(v, order), w);
  // G vanishes to order depth(v) >= 1, so G/t is a genuine power series.
  RatSeries g_over_t = series_shift_down(g).truncated(order - 1);

  // t/(e^t - 1) as the reciprocal of (e^t - 1)/t.
  RatSeries expm1 = exp_linear(Rational(1), order);
  expm1[0] = 0;
  RatSeries expm1_over_t = series_shift_down(expm1).truncated(order - 1);
  RatSeries kernel = series_mul(g_over_t, series_inverse(expm1_over_t));

  // e^{xt} with polynomial coefficients x^k/k!.
  PolySeries exp_xt(order - 1);
  Rational inv_factorial = 1;
  for (std::size_t k = 0; k <= order - 1; ++k) {
    exp_xt[k] = PolyRat::monomial(inv_factorial, k);
    inv_factorial /= static_cast<unsigned long>(k + 1);
  }
  PolySeries full = series_mul(exp_xt, kernel);

  std::vector<PolyRat> out;
  out.reserve(m_max + 1);
  Rational factorial = 1;
  for (unsigned m = 0; m <= m_max; ++m) {
    if (m > 0) factorial *= m;
    out.push_back(full[m] * factorial);
  }
  return out;
}

}  // namespace akzeta
