#include <doctest.h>

#include "akzeta/evaluator.hpp"
#include "akzeta/harmonic_bell.hpp"
#include "akzeta/nested_sum.hpp"
#include "support.hpp"

using namespace akzeta;
using oracle::pi;

namespace {

PrecisionContext make_ctx(std::optional<long> cutoff = std::nullopt) {
  PrecisionContext ctx;
  ctx.digits = 50;
  ctx.cutoff = cutoff;
  return ctx;
}

void check_against(const Evaluation& e, const Real& reference) {
  INFO("value " << e.value.str(30) << " reference " << reference.str(30) << " bound " << e.bound.str(5));
  CHECK(abs(e.value - reference) <= e.bound);
}

}  // namespace

TEST_CASE("nested sums match brute force and are mode independent") {
  auto f = [](std::size_t level, long n) { return Real(1) / (Real(n) + level + 1); };
  WeightFn w = [&](long n, std::span<Real> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(i, n);
  };
  const std::vector<long> checks{0, 7, 40};
  const auto seq = nested_sum(3, 40, w, checks);
  CHECK(abs(seq.prefix[3] - oracle::brute_nested(3, 40, f)) < Real("1e-45"));
  CHECK(abs(seq.checkpoints[1][3] - oracle::brute_nested(3, 7, f)) < Real("1e-45"));
  CHECK(seq.checkpoints[0][0] == 1);
  CHECK(seq.checkpoints[0][1] == 0);

  const long big = 3 * kBlockSize + 17;
  const auto a = nested_sum(3, big, w, {}, false);
  const auto b = nested_sum(3, big, w, {}, true);
  for (std::size_t j = 0; j <= 3; ++j) CHECK(a.prefix[j] == b.prefix[j]);
  CHECK_THROWS_AS(nested_sum(2, 10, w, std::vector<long>{11}), DomainError);
}

TEST_CASE("power tails agree with direct summation") {
  // U_1(N) for ζ(1,2;x) beyond N against a long partial sum plus its own tail.
  const std::vector<unsigned> e{1, 2};
  const std::vector<Real> c{Real(1), Real(1)};
  const Real x = Real(1) / 3;
  const long n = 200;
  const auto tails = power_sum_tails(e, c, x, n, 50);
  const auto far = power_sum_tails(e, c, x, 4 * n, 50);
  // Σ_{n<a<b} = Σ_{n<a<b≤4n} + Σ_{n<a≤4n<b} + Σ_{4n<a<b}.
  Real window = 0, prefix = 0;
  for (long b = n + 1; b <= 4 * n; ++b) {
    window += prefix / pow(b + x, 2);
    prefix += 1 / (b + x);
  }
  const Real total = window + prefix * far.values[1] + far.values[0];
  CHECK(abs(tails.values[0] - total) <= tails.bounds[0] + far.bounds[0] + prefix * far.bounds[1] + Real("1e-40"));
  CHECK(tails.bounds[0] < Real("1e-40"));
  CHECK_THROWS_AS(power_sum_tails(std::vector<unsigned>{2, 1}, c, x, n, 50), DivergenceError);
}

TEST_CASE("Hurwitz multiple zeta values") {
  const auto ctx = make_ctx();
  const auto z2 = eval_hurwitz_mzv({2}, Real(0), ctx);
  CHECK(z2.bound_kind == BoundKind::rigorous);
  check_against(z2, pi() * pi() / 6);
  check_against(eval_hurwitz_mzv({1, 2}, Real(0), ctx), oracle::zeta(3));
  check_against(eval_hurwitz_mzv({2}, Real(-0.5), ctx), pi() * pi() / 2);
  check_against(eval_hurwitz_mzv({2, 2}, Real(0), ctx), pow(pi(), 4) / 120);
  check_against(eval_hurwitz_mzv({1, 3}, Real(0), ctx), pow(pi(), 4) / 360);
  check_against(eval_hurwitz_mzv({1, 1, 2}, Real(0), ctx), pow(pi(), 4) / 90);
  check_against(eval_hurwitz_mzv({3}, Real(0.5), ctx), 7 * oracle::zeta(3) - 8);
  CHECK(eval_hurwitz_mzv({1, 2}, Real(0), ctx).bound < Real("1e-30"));

  // Brute force with a tail estimate well below the tolerance.
  const Real x = Real(2) / 5;
  const auto direct = oracle::brute_nested(2, 300, [&](std::size_t level, long n) {
    return pow(n + x, -static_cast<int>(level == 0 ? 2 : 3));
  });
  const auto ev = eval_hurwitz_mzv({2, 3}, x, ctx);
  CHECK(abs(ev.value - direct) < Real("1e-5"));

  CHECK_THROWS_AS(eval_hurwitz_mzv({2, 1}, Real(0), ctx), DivergenceError);
  CHECK_THROWS_AS(eval_hurwitz_mzv({2}, Real(-1), ctx), DomainError);
}

TEST_CASE("multiple zeta duality at weight 5") {
  const auto ctx = make_ctx();
  for (const auto& c : admissible_compositions(5)) {
    const auto a = eval_hurwitz_mzv(c, Real(0), ctx);
    const auto b = eval_hurwitz_mzv(dual(c), Real(0), ctx);
    CHECK(abs(a.value - b.value) <= a.bound + b.bound);
  }
}

TEST_CASE("t-values") {
  const auto ctx = make_ctx();
  check_against(eval_t({2}, ctx), pi() * pi() / 8);
  check_against(eval_t({3}, ctx), 7 * oracle::zeta(3) / 8);
  for (unsigned w = 2; w <= 6; ++w) {
    for (const auto& c : admissible_compositions(w)) {
      const auto t = eval_t(c, ctx);
      const auto h = eval_hurwitz_mzv(c, Real(-0.5), ctx);
      const Real scale = pow(Real(2), -static_cast<int>(w));
      CHECK(abs(t.value - scale * h.value) <= t.bound + scale * h.bound);
    }
  }
  CHECK_THROWS_AS(eval_t({1}, ctx), DivergenceError);
}

TEST_CASE("multiple polylogarithms") {
  const auto ctx = make_ctx();
  const Real l2 = oracle::ln2();
  check_against(eval_li({1}, Real(0.5), ctx), l2);
  check_against(eval_li({1, 1}, Real(0.5), ctx), l2 * l2 / 2);
  check_against(eval_li({2}, Real(0.5), ctx), pi() * pi() / 12 - l2 * l2 / 2);
  check_against(eval_li({2}, Real(1), ctx), pi() * pi() / 6);
  check_against(eval_li({1}, Real(-0.5), ctx), -log(Real(1.5)));
  CHECK(eval_li({3}, Real(0), ctx).value == 0);
  CHECK_THROWS_AS(eval_li({1}, Real(1.5), ctx), DomainError);
  CHECK_THROWS_AS(eval_li({2, 1}, Real(1), ctx), DivergenceError);
}

TEST_CASE("beta-weighted Bell sums") {
  const auto ctx = make_ctx();
  // B(n,1) = 1/n, so Σ B(n,1)/n = ζ(2).
  const auto slow = eval_ak_lhs({1}, Real(1), 0, Real(0), ctx);
  CHECK(slow.bound_kind == BoundKind::estimated);
  CHECK(abs(slow.value - pi() * pi() / 6) < Real("1e-12"));

  const auto geo = eval_ak_lhs({1}, Real(4), 0, Real(-0.5), ctx);
  CHECK(geo.bound_kind == BoundKind::rigorous);
  check_against(geo, pi() * pi() / 18);

  // ξ_1(2) = Σ H_n / n^2 = 2 ζ(3).
  const auto xi = eval_ak_lhs({1}, Real(1), 1, Real(0), ctx);
  CHECK(abs(xi.value - 2 * oracle::zeta(3)) < Real("1e-12"));

  CHECK_THROWS_AS(eval_ak_lhs({1}, Real(0.5), 0, Real(0), ctx), DomainError);
  CHECK_THROWS_AS(eval_ak_lhs({1}, Real(2), 0, Real(-1), ctx), DomainError);
}

TEST_CASE("Hurwitz combinations on the dual side") {
  const auto ctx = make_ctx();
  check_against(eval_ak_rhs({1}, 0, Real(0), ctx), pi() * pi() / 6);
  check_against(eval_ak_rhs({1}, 1, Real(0), ctx), 2 * oracle::zeta(3));
  const auto t12 = eval_t({1, 2}, ctx);
  const auto r = eval_ak_rhs({1, 1}, 0, Real(-0.5), ctx);
  CHECK(abs(r.value - 8 * t12.value) <= r.bound + 8 * t12.bound);
  for (unsigned m = 0; m <= 3; ++m) {
    const auto a = eval_ak_rhs({1, 2}, m, Real(0.5), ctx);
    const auto b = eval_ak_rhs_expanded({1, 2}, m, Real(0.5), ctx);
    CHECK(abs(a.value - b.value) <= a.bound + b.bound);
  }
}

TEST_CASE("truncated Bell sums equal the alternating binomial form exactly") {
  for (const auto& x : {Rational(0), Rational(1, 2), Rational(-1, 2)}) {
    for (const auto& v : {Composition{1}, Composition{2, 1}, Composition{1, 1, 2}}) {
      for (unsigned m : {0u, 1u, 3u}) {
        const Rational p(3, 2);
        CHECK(ak_lhs_truncated_exact(v, p, m, x, 30) == ak_lhs_truncated_d_operator(v, p, m, x, 30));
      }
    }
  }
  // Independent brute force for depth two.
  const Rational x(1, 3), p(2);
  const unsigned m = 2, n_max = 9;
  const ExactHarmonicTable h(n_max, m, x);
  Rational direct = 0;
  for (unsigned b = 1; b <= n_max; ++b) {
    const auto bell = bell_modified<Rational>(h.row(b, m));
    Rational outer = oracle::beta_by_gamma(b, x) * bell[m] / Rational(b);
    for (unsigned k = 0; k < b; ++k) outer /= p;
    for (unsigned a = 1; a < b; ++a) direct += outer / Rational(a * a);
  }
  CHECK(ak_lhs_truncated_exact({2, 1}, p, m, x, n_max) == direct);
}

TEST_CASE("alternating harmonic transforms") {
  const auto ctx = make_ctx();
  const auto p4 = eval_euler_transform(Real(4), 1, Real(-0.5), ctx);
  CHECK(p4.bound_kind == BoundKind::rigorous);
  check_against(p4, pi() * pi() / 18);
  const auto p2 = eval_euler_transform(Real(2), 1, Real(-0.5), ctx);
  CHECK(p2.bound_kind == BoundKind::estimated);
  CHECK(abs(p2.value - pi() * pi() / 8) < Real("1e-20"));
  for (unsigned m = 0; m <= 2; ++m) {
    const auto a = eval_euler_transform(Real(3), m + 1, Real(0), ctx);
    const auto b = eval_ak_lhs({1}, Real(3), m, Real(0), ctx);
    CHECK(abs(a.value - b.value) <= a.bound + b.bound);
  }
  CHECK_THROWS_AS(eval_euler_transform(Real(1.5), 1, Real(0), ctx), DomainError);
}

TEST_CASE("shifted-argument power series") {
  const auto ctx = make_ctx();
  const auto at_zero = eval_prop2_series({2}, Real(0.5), Real(0), 4, ctx);
  const auto h = eval_hurwitz_mzv({2}, Real(0.5), ctx);
  CHECK(abs(at_zero.value - h.value) <= at_zero.bound + h.bound);

  const auto series = eval_prop2_series({2}, Real(0.5), Real(0.25), 8, ctx);
  const auto target = eval_hurwitz_mzv({2}, Real(0.25), ctx);
  CHECK(abs(series.value - target.value) <= series.bound + target.bound + Real("1e-6"));

  // First-order coefficient at x = 0 is 2ζ(3), the x-derivative of -ζ(2; x).
  const Real z("1e-3");
  const auto one = eval_prop2_series({2}, Real(0), z, 1, ctx);
  const auto two = eval_prop2_series({2}, Real(0), z, 2, ctx);
  CHECK(abs((two.value - one.value) / z - 2 * oracle::zeta(3)) < Real("1e-9"));
  const Real hstep("1e-6");
  const Real fd = (eval_hurwitz_mzv({2}, -hstep, ctx).value - eval_hurwitz_mzv({2}, hstep, ctx).value) / (2 * hstep);
  CHECK(abs(fd - 2 * oracle::zeta(3)) < Real("1e-9"));

  CHECK_THROWS_AS(eval_prop2_series({2}, Real(0.5), Real(2), 4, ctx), DomainError);
}

TEST_CASE("parallel evaluation is bit-identical") {
  auto ctx = make_ctx(20000);
  const auto seq = eval_hurwitz_mzv({1, 2, 3}, Real(0.25), ctx);
  ctx.parallel = true;
  const auto par = eval_hurwitz_mzv({1, 2, 3}, Real(0.25), ctx);
  CHECK(seq.value == par.value);
  CHECK(seq.bound == par.bound);
}
