#include <doctest.h>

#include "akzeta/powerseries.hpp"
#include "support.hpp"

using namespace akzeta;

namespace {

RatSeries series_of(std::vector<Rational> c, std::size_t order) { return RatSeries(std::move(c), order); }

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const PolyRat x = PolyRat::monomial(1, 1);
  const PolyRat p = x * x - x + Rational(1, 6);
  CHECK(p.str() == "x^2 - x + 1/6");
  CHECK(p.degree() == 2);
  CHECK(PolyRat().is_zero());
  CHECK(PolyRat().str() == "0");
  CHECK(PolyRat(1).str() == "1");
  CHECK((x - Rational(1, 2)).str() == "x - 1/2");
  CHECK((p - p).is_zero());
  CHECK(p(Rational(1, 2)) == Rational(-1, 12));
  CHECK(PolyRat(std::vector<Rational>{1, 0, 0}).degree() == 0);
  CHECK((-x * Rational(3)).str() == "-3*x");
}

TEST_CASE("series arithmetic") {
  const RatSeries e = exp_linear(Rational(1), 3);
  CHECK(e == series_of({1, 1, Rational(1, 2), Rational(1, 6)}, 3));
  CHECK(series_inverse(series_of({1, 1}, 3)) == series_of({1, -1, 1, -1}, 3));
  CHECK(series_mul(e, exp_linear(Rational(-1), 3)) == series_of({1}, 3));

  RatSeries t(6);
  t[1] = 1;
  CHECK(series_exp(t) == exp_linear(Rational(1), 6));
  CHECK(series_log(exp_linear(Rational(1), 6)) == t);

  // log(1+u) ∘ (e^t - 1) = t exactly.
  RatSeries u = exp_linear(Rational(1), 6);
  u[0] = 0;
  RatSeries log1p(6);
  for (int k = 1; k <= 6; ++k) log1p[k] = Rational(k % 2 ? 1 : -1, k);
  CHECK(series_compose(log1p, u) == t);

  CHECK_THROWS_AS(series_inverse(series_of({0, 1}, 3)), DomainError);
  CHECK_THROWS_AS(series_compose(log1p, exp_linear(Rational(1), 6)), DomainError);
  CHECK_THROWS_AS(series_log(series_of({2, 1}, 3)), DomainError);
  CHECK_THROWS_AS(series_exp(series_of({1, 1}, 3)), DomainError);
  CHECK_THROWS_AS(series_mul(e, t), DomainError);
  CHECK(series_shift_down(t) == series_of({1}, 5));
}

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_numbers(12);
  CHECK(b[0] == 1);
  CHECK(b[1] == Rational(-1, 2));
  CHECK(b[2] == Rational(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[4] == Rational(-1, 30));
  CHECK(b[6] == Rational(1, 42));
  CHECK(b[12] == Rational(-691, 2730));
  // Σ_{k<m} C(m,k) B_k = 0 for m ≥ 2.
  const auto big = bernoulli_numbers(30);
  for (unsigned m = 2; m <= 30; ++m) {
    Rational s = 0;
    for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m, k)) * big[k];
    CHECK(s == 0);
  }
}

TEST_CASE("polylogarithm coefficients") {
  const auto li1 = li_series({1}, 8);
  for (int n = 1; n <= 8; ++n) CHECK(li1[n] == Rational(1, n));
  CHECK(li1[0] == 0);
  CHECK(li_series({2}, 4)[3] == Rational(1, 9));

  const auto li11 = li_series({1, 1}, 6);
  CHECK(li11[1] == 0);
  for (unsigned n = 2; n <= 6; ++n) {
    Rational direct = 0;
    for (unsigned a = 1; a < n; ++a) direct += Rational(1, a * n);
    CHECK(li11[n] == direct);
    CHECK(li11[n] == oracle::harmonic(n - 1, 1, Rational(0)) / n);
  }
  // Depth-three brute force.
  const auto li123 = li_series({1, 2, 3}, 7);
  for (unsigned n = 0; n <= 7; ++n) {
    Rational direct = 0;
    for (unsigned a = 1; a < n; ++a)
      for (unsigned b = a + 1; b < n; ++b) direct += Rational(1, a * b * b * n * n * n);
    CHECK(li123[n] == direct);
  }
  CHECK_THROWS_AS(li_series({1, 1, 1}, 2), DomainError);
}

TEST_CASE("generalized Bernoulli polynomials") {
  const auto classic = ak_bernoulli_polys({1}, Rational(1), 10);
  REQUIRE(classic.size() == 11);
  CHECK(classic[0].str() == "1");
  CHECK(classic[1].str() == "x - 1/2");
  for (unsigned m = 0; m <= 10; ++m) CHECK(classic[m] == bernoulli_polynomial(m));

  CHECK(ak_bernoulli_polys({2}, Rational(1), 0)[0].str() == "1");
  CHECK_THROWS_AS(ak_bernoulli_polys({1}, Rational(1, 2), 3), DomainError);

  // Appell property: d/dx B_m(x) = m B_{m-1}(x), from the e^{xt} factor.
  const auto gen = ak_bernoulli_polys({1, 2}, Rational(3), 8);
  for (unsigned m = 1; m <= 8; ++m) {
    const auto c = gen[m].coefficients();
    std::vector<Rational> derivative;
    for (std::size_t k = 1; k < c.size(); ++k) derivative.push_back(c[k] * static_cast<unsigned long>(k));
    CHECK(PolyRat(derivative) == gen[m - 1] * Rational(m));
  }
}
