#include "akzeta/harmonic_bell.hpp"

#include "akzeta/combinatorics.hpp"

namespace akzeta {

Rational d_operator(unsigned n, unsigned s, const Rational& x) {
  if (n < 1) throw DomainError("d_operator: n must be >= 1");
  if (!(x > -1)) throw DomainError("d_operator: x must satisfy x > -1");
  Rational sum = 0;
  for (unsigned k = 0; k < n; ++k) {
    Rational term = Rational(binomial(n - 1, k)) * detail::inverse_power(x + (k + 1), s);
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

Real d_operator(unsigned n, const Real& s, const Real& x) {
  if (n < 1) throw DomainError("d_operator: n must be >= 1");
  if (!(x > -1)) throw DomainError("d_operator: x must satisfy x > -1");
  Real sum = 0;
  for (unsigned k = 0; k < n; ++k) {
    Real term = Real(binomial(n - 1, k)) * pow(x + (k + 1), -s);
    if (k % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace akzeta
