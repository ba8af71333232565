#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "akzeta/combinatorics.hpp"
#include "akzeta/numerics.hpp"
#include "akzeta/types.hpp"

// Reference values and brute-force oracles. Nothing here calls into the
// library's evaluators, so the tests compare two independent computations.
namespace oracle {

using akzeta::Composition;
using akzeta::Rational;
using akzeta::Real;

inline Real pi() { return boost::math::constants::pi<Real>(); }
inline Real zeta(int s) { return boost::math::zeta(Real(s)); }
inline Real catalan() { return boost::math::constants::catalan<Real>(); }
inline Real ln2() { return boost::math::constants::ln_two<Real>(); }

inline Real to_r(const Rational& q) { return akzeta::to_real(q); }

inline bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

/// Dual through binary words: ζ(k_1,…,k_r) with k_1 ≥ 2 outermost-first
/// maps to x^{k_1-1} y ⋯ x^{k_r-1} y; duality reverses the word and swaps x, y.
inline Composition dual_by_words(const Composition& c) {
  std::string word;
  auto parts = std::vector<unsigned>(c.parts().begin(), c.parts().end());
  std::reverse(parts.begin(), parts.end());
  for (unsigned k : parts) word += std::string(k - 1, 'x') + "y";
  std::reverse(word.begin(), word.end());
  for (char& ch : word) ch = ch == 'x' ? 'y' : 'x';
  std::vector<unsigned> out;
  unsigned run = 1;
  for (char ch : word) {
    if (ch == 'x') {
      ++run;
    } else {
      out.push_back(run);
      run = 1;
    }
  }
  std::reverse(out.begin(), out.end());
  return Composition(out);
}

/// Modified Bell polynomial from the partition formula
///   P_m = Σ_{Σ k j_k = m} Π_k x_k^{j_k} / (j_k! k^{j_k}).
inline Rational bell_by_partitions(const std::vector<Rational>& xs, unsigned m) {
  std::function<Rational(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned k) -> Rational {
    if (remaining == 0) return Rational(1);
    if (k == 0) return Rational(0);
    Rational total = 0;
    Rational factor = 1;
    for (unsigned j = 0; j * k <= remaining; ++j) {
      total += factor * rec(remaining - j * k, k - 1);
      factor *= xs[k - 1] / Rational(static_cast<int>(k * (j + 1)));
    }
    return total;
  };
  return rec(m, m);
}

/// B(n, 1+x) = (n-1)! / ((1+x)(2+x)⋯(n+x)).
inline Rational beta_by_gamma(unsigned n, const Rational& x) {
  Rational out = 1;
  for (unsigned j = 1; j < n; ++j) out *= j;
  for (unsigned j = 1; j <= n; ++j) out /= (x + j);
  return out;
}

inline Rational harmonic(unsigned n, unsigned k, const Rational& x) {
  Rational out = 0;
  for (unsigned j = 1; j <= n; ++j) {
    Rational t = 1;
    for (unsigned i = 0; i < k; ++i) t /= (x + j);
    out += t;
  }
  return out;
}

/// Σ over n_1 < … < n_q ≤ n_max of Π f(i, n_i), by plain recursion.
inline Real brute_nested(std::size_t depth, long n_max, const std::function<Real(std::size_t, long)>& f) {
  std::function<Real(std::size_t, long)> rec = [&](std::size_t level, long lo) -> Real {
    if (level == depth) return Real(1);
    Real total = 0;
    for (long n = lo; n <= n_max; ++n) total += f(level, n) * rec(level + 1, n + 1);
    return total;
  };
  return rec(0, 1);
}

}  // namespace oracle
