#include <algorithm>
#include <limits>
#include <optional>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "akzeta/combinatorics.hpp"
#include "akzeta/numerics.hpp"

namespace akzeta {

namespace {

using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

constexpr unsigned kEndCorrections = 3;

struct Fit {
  // c[k][j] multiplies N^{-γ} s^{-γ-k} (ln s)^j with s = n/N.
  std::vector<std::vector<Real>> c;
  Real tail;
  Real remainder;
};

/// Value at s = 1 of the r-th derivative of s^{-a} (ln s)^j.
Real derivative_at_one(const Real& a, unsigned j, unsigned r) {
  // poly[i] is the coefficient of s^{-b} (ln s)^i, b = a + (derivatives taken).
  std::vector<Real> poly(j + 1, Real(0));
  poly[j] = 1;
  Real b = a;
  for (unsigned step = 0; step < r; ++step) {
    std::vector<Real> next(j + 1, Real(0));
    for (unsigned i = 0; i <= j; ++i) {
      if (poly[i] == 0) continue;
      next[i] -= b * poly[i];
      if (i > 0) next[i - 1] += i * poly[i];
    }
    poly = std::move(next);
    b += 1;
  }
  return poly[0];
}

/// Σ_{n>N} f(n/N) for f(s) = s^{-a}(ln s)^j: integral plus end corrections.
/// Also returns the magnitude of the first omitted correction.
std::pair<Real, Real> model_tail(const Real& a, unsigned j, long cutoff, const std::vector<Real>& weights) {
  const Real n = cutoff;
  Real factorial = 1;
  for (unsigned i = 2; i <= j; ++i) factorial *= i;
  Real out = n * factorial / pow(a - 1, j + 1);
  if (j == 0) out -= Real(0.5);
  Real scale = 1 / n;
  for (unsigned i = 1; i <= kEndCorrections; ++i) {
    out -= weights[i - 1] * scale * derivative_at_one(a, j, 2 * i - 1);
    scale /= n * n;
  }
  Real omitted = abs(weights[kEndCorrections] * scale * derivative_at_one(a, j, 2 * kEndCorrections + 1));
  return {out, omitted};
}

std::optional<Fit> fit_once(std::span<const TermSample> samples, long cutoff, const Real& gamma, unsigned corrections,
                            unsigned log_degree, const std::vector<Real>& weights) {
  const std::size_t cols = static_cast<std::size_t>(corrections + 1) * (log_degree + 1);
  if (samples.size() < cols + 2) return std::nullopt;

  const Real n_cut = cutoff;
  const Real scale = pow(n_cut, gamma);
  Matrix a(samples.size(), cols);
  Vector rhs(samples.size());
  for (std::size_t row = 0; row < samples.size(); ++row) {
    const Real s = Real(samples[row].n) / n_cut;
    const Real ls = log(s);
    // Rows are weighted by s^γ so every sample carries comparable relative weight.
    Real inv_s_k = 1;
    std::size_t col = 0;
    for (unsigned k = 0; k <= corrections; ++k) {
      Real lj = 1;
      for (unsigned j = 0; j <= log_degree; ++j, ++col) {
        a(row, col) = inv_s_k * lj;
        lj *= ls;
      }
      inv_s_k /= s;
    }
    rhs(row) = samples[row].value * scale * pow(s, gamma);
  }

  // Equilibrate columns; the log powers differ in scale by orders of magnitude.
  Vector col_scale(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Real m = a.col(c).cwiseAbs().maxCoeff();
    col_scale(c) = m > 0 ? m : Real(1);
    a.col(c) /= col_scale(c);
  }
  Eigen::ColPivHouseholderQR<Matrix> qr(a);
  qr.setThreshold(Real(1000) * std::numeric_limits<Real>::epsilon());
  if (qr.rank() < static_cast<Eigen::Index>(cols)) throw DiagnosticError("tail_fit: rank-deficient least-squares system");
  const Vector sol = qr.solve(rhs).cwiseQuotient(col_scale);

  Fit fit;
  fit.c.assign(corrections + 1, std::vector<Real>(log_degree + 1, Real(0)));
  CompensatedSum tail;
  Real remainder = 0;
  std::size_t col = 0;
  for (unsigned k = 0; k <= corrections; ++k) {
    for (unsigned j = 0; j <= log_degree; ++j, ++col) {
      fit.c[k][j] = sol(col);
      auto [t, omitted] = model_tail(gamma + k, j, cutoff, weights);
      tail += sol(col) * t;
      remainder += abs(sol(col)) * omitted;
    }
  }
  fit.tail = tail.value() / scale;
  fit.remainder = remainder / scale;
  return fit;
}

}  // namespace

TailFitResult tail_fit(std::span<const TermSample> samples, long cutoff, const TailModel& model) {
  if (!(model.gamma > 1)) throw DiagnosticError("tail_fit: decay exponent must exceed 1 for a convergent tail");
  if (samples.size() < 8) throw DiagnosticError("tail_fit: at least 8 samples are required");
  const std::size_t params = static_cast<std::size_t>(model.corrections + 1) * (model.log_degree + 1);
  if (samples.size() < params + 2)
    throw DiagnosticError("tail_fit: " + std::to_string(samples.size()) + " samples cannot determine " +
                          std::to_string(params) + " parameters");
  if (std::all_of(samples.begin(), samples.end(), [](const TermSample& t) { return t.value == 0; })) {
    std::vector<std::vector<Real>> zero(model.corrections + 1, std::vector<Real>(model.log_degree + 1, Real(0)));
    return {Real(0), Real(0), std::move(zero)};
  }

  const auto weights = euler_maclaurin_weights(kEndCorrections + 1);
  const Fit base = *fit_once(samples, cutoff, model.gamma, model.corrections, model.log_degree, weights);

  // Spread against perturbed refits: one fewer correction, the upper half of the
  // window only, and one more log power.
  Real spread = 0;
  bool any = false;
  auto compare = [&](const std::optional<Fit>& alt) {
    if (!alt) return;
    spread = std::max<Real>(spread, abs(alt->tail - base.tail));
    any = true;
  };
  if (model.corrections > 0)
    compare(fit_once(samples, cutoff, model.gamma, model.corrections - 1, model.log_degree, weights));
  compare(fit_once(samples.subspan(samples.size() / 2), cutoff, model.gamma, model.corrections, model.log_degree,
                   weights));
  compare(fit_once(samples, cutoff, model.gamma, model.corrections, model.log_degree + 1, weights));

  TailFitResult out;
  out.tail = base.tail;
  out.bound = (any ? 2 * spread : abs(base.tail)) + base.remainder;

  // Re-expand (n/N)^{-γ-k} (ln n - ln N)^j into n^{-γ-k} (ln n)^i.
  const Real log_n = log(Real(cutoff));
  out.coefficients.assign(model.corrections + 1, std::vector<Real>(model.log_degree + 1, Real(0)));
  Real n_pow_k = 1;
  for (unsigned k = 0; k <= model.corrections; ++k) {
    for (unsigned i = 0; i <= model.log_degree; ++i) {
      Real acc = 0;
      for (unsigned j = i; j <= model.log_degree; ++j)
        acc += base.c[k][j] * to_real(binomial(j, i)) * pow(-log_n, static_cast<int>(j - i));
      out.coefficients[k][i] = n_pow_k * acc;
    }
    n_pow_k *= cutoff;
  }
  return out;
}

}  // namespace akzeta
