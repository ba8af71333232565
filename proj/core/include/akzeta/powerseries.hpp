#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "akzeta/combinatorics.hpp"
#include "akzeta/types.hpp"

namespace akzeta {

/// Polynomial in one variable x with exact rational coefficients, stored
/// lowest degree first without trailing zeros.
class PolyRat {
 public:
  PolyRat() = default;
  PolyRat(const Rational& constant);  // NOLINT: implicit lift of scalars is intended
  PolyRat(int constant) : PolyRat(Rational(constant)) {}  // NOLINT
  explicit PolyRat(std::vector<Rational> coeffs);

  static PolyRat monomial(const Rational& c, std::size_t degree);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;

  PolyRat& operator+=(const PolyRat& o);
  PolyRat& operator-=(const PolyRat& o);
  PolyRat& operator*=(const PolyRat& o);
  PolyRat& operator*=(const Rational& c);
  PolyRat& operator/=(const Rational& c);

  friend PolyRat operator+(PolyRat a, const PolyRat& b) { return a += b; }
  friend PolyRat operator-(PolyRat a, const PolyRat& b) { return a -= b; }
  friend PolyRat operator*(PolyRat a, const PolyRat& b) { return a *= b; }
  friend PolyRat operator*(PolyRat a, const Rational& c) { return a *= c; }
  friend PolyRat operator/(PolyRat a, const Rational& c) { return a /= c; }
  friend PolyRat operator-(PolyRat a) { return a *= Rational(-1); }
  friend bool operator==(const PolyRat&, const PolyRat&) = default;

  /// Descending-degree text, e.g. "x^2 - x + 1/6".
  std::string str() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Power series c_0 + c_1 t + … + c_M t^M, arithmetic truncated at order M.
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1, C(0)) {}
  TruncSeries(std::vector<C> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) { coeffs_.resize(order + 1, C(0)); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const C& operator[](std::size_t i) const { return coeffs_[i]; }
  C& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const C> coefficients() const { return coeffs_; }

  /// Same series, reinterpreted at a different truncation order (pads or cuts).
  TruncSeries truncated(std::size_t order) const { return TruncSeries(coeffs_, order); }

  TruncSeries& operator+=(const TruncSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void require_same_order(const TruncSeries& o) const {
    if (o.order() != order()) throw DomainError("series order mismatch");
  }
  std::vector<C> coeffs_;
};

using RatSeries = TruncSeries<Rational>;
using PolySeries = TruncSeries<PolyRat>;

/// Truncated product; the coefficient ring of `a` determines the result ring.
template <class A, class B>
TruncSeries<A> series_mul(const TruncSeries<A>& a, const TruncSeries<B>& b) {
  if (a.order() != b.order()) throw DomainError("series_mul: order mismatch");
  const std::size_t m = a.order();
  TruncSeries<A> out(m);
  for (std::size_t i = 0; i <= m; ++i) {
    if (a[i] == A(0)) continue;
    for (std::size_t j = 0; i + j <= m; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatSeries series_scale(const RatSeries& a, const Rational& c);
/// 1/a; requires a_0 != 0.
RatSeries series_inverse(const RatSeries& a);
/// exp(a); requires a_0 = 0 so the result stays rational.
RatSeries series_exp(const RatSeries& a);
/// log(a); requires a_0 = 1.
RatSeries series_log(const RatSeries& a);
/// f(g(t)); requires g_0 = 0.
RatSeries series_compose(const RatSeries& f, const RatSeries& g);
/// a(t)/t; requires a_0 = 0. The top coefficient of the result is unknown
/// and returned as zero, so the order drops by one.
RatSeries series_shift_down(const RatSeries& a);

/// e^{ct} to order M.
RatSeries exp_linear(const Rational& c, std::size_t order);

/// Bernoulli numbers B_0..B_M of t/(e^t - 1) (so B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(std::size_t max_index);

/// Classical Bernoulli polynomial B_m(x) = Σ_k C(m,k) B_k x^{m-k}.
PolyRat bernoulli_polynomial(unsigned m);

/// Coefficients c_n = Σ_{n_1<…<n_k=n} Π n_i^{-v_i} of Li_v(w), n = 0..order.
RatSeries li_series(const Composition& v, std::size_t order);

/// B^v_{p,0}(x), …, B^v_{p,m_max}(x) from
///   e^{xt}/(e^t-1) · Li_v((1-e^{-t})/p) = Σ_m B^v_{p,m}(x) t^m/m!.
/// Throws DomainError for p < 1.
std::vector<PolyRat> ak_bernoulli_polys(const Composition& v, const Rational& p, unsigned m_max);

}  // namespace akzeta
