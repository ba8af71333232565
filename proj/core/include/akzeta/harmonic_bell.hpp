#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "akzeta/types.hpp"

namespace akzeta {

namespace detail {
template <class Scalar>
Scalar inverse_power(const Scalar& base, unsigned k) {
  Scalar inv = Scalar(1) / base;
  Scalar out = 1;
  for (unsigned i = 0; i < k; ++i) out *= inv;
  return out;
}
}  // namespace detail

/// Prefix table of shifted harmonic numbers
///   H_n^{(k)}(x) = Σ_{j=1}^{n} (j + x)^{-k},   1 ≤ k ≤ m, 0 ≤ n ≤ N.
///
/// Scalar = Rational gives the exact table, Scalar = Real the working-precision
/// one. Immutable once built.
template <class Scalar>
class HarmonicTable {
 public:
  HarmonicTable(std::size_t cutoff, unsigned max_order, Scalar shift)
      : cutoff_(cutoff), max_order_(max_order), shift_(std::move(shift)) {
    if (max_order_ < 1) throw DomainError("harmonic_table: order must be >= 1");
    if (!(shift_ > -1)) throw DomainError("harmonic_table: shift x must satisfy x > -1");
    values_.assign(max_order_, std::vector<Scalar>(cutoff_ + 1, Scalar(0)));
    for (std::size_t n = 1; n <= cutoff_; ++n) {
      Scalar inv = Scalar(1) / (Scalar(static_cast<unsigned long>(n)) + shift_);
      Scalar power = inv;
      for (unsigned k = 0; k < max_order_; ++k) {
        values_[k][n] = values_[k][n - 1] + power;
        power *= inv;
      }
    }
  }

  /// H_n^{(k)}(x).
  const Scalar& operator()(unsigned k, std::size_t n) const { return values_.at(k - 1).at(n); }

  /// The row (H_n^{(1)}(x), …, H_n^{(m)}(x)) fed to the modified Bell polynomials.
  std::vector<Scalar> row(std::size_t n, unsigned m) const {
    std::vector<Scalar> out;
    out.reserve(m);
    for (unsigned k = 1; k <= m; ++k) out.push_back((*this)(k, n));
    return out;
  }

  /// O_n^{(k)} = Σ_{j≤n} (2j-1)^{-k} = 2^{-k} H_n^{(k)}(-1/2). Only meaningful
  /// for a table built with x = -1/2.
  Scalar odd(unsigned k, std::size_t n) const {
    if (shift_ != Scalar(-1) / 2) throw DomainError("odd harmonic numbers need a table with x = -1/2");
    Scalar scale = 1;
    for (unsigned i = 0; i < k; ++i) scale /= 2;
    return scale * (*this)(k, n);
  }

  std::size_t cutoff() const { return cutoff_; }
  unsigned max_order() const { return max_order_; }
  const Scalar& shift() const { return shift_; }

 private:
  std::size_t cutoff_;
  unsigned max_order_;
  Scalar shift_;
  std::vector<std::vector<Scalar>> values_;
};

using ExactHarmonicTable = HarmonicTable<Rational>;
using RealHarmonicTable = HarmonicTable<Real>;

/// Modified Bell polynomials: exp(Σ_k x_k z^k / k) = Σ_m P_m z^m.
/// Returns P_0, …, P_m for m = xs.size(), via P_j = (1/j) Σ_{k=1}^{j} x_k P_{j-k}.
template <class Scalar>
std::vector<Scalar> bell_modified(std::span<const Scalar> xs) {
  std::vector<Scalar> p(xs.size() + 1, Scalar(0));
  p[0] = 1;
  for (std::size_t j = 1; j <= xs.size(); ++j) {
    Scalar acc = 0;
    for (std::size_t k = 1; k <= j; ++k) acc += xs[k - 1] * p[j - k];
    p[j] = acc / Scalar(static_cast<unsigned long>(j));
  }
  return p;
}

/// P_m(xs) alone.
template <class Scalar>
Scalar bell_modified_top(std::span<const Scalar> xs) {
  return bell_modified(xs).back();
}

/// D(λ_{s,x})(n) = Σ_{k=0}^{n-1} (-1)^k C(n-1,k) (x+k+1)^{-s}; exact for integer s.
Rational d_operator(unsigned n, unsigned s, const Rational& x);
Real d_operator(unsigned n, const Real& s, const Real& x);

}  // namespace akzeta
