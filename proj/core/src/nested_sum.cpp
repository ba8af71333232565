#include "akzeta/nested_sum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "akzeta/numerics.hpp"

namespace akzeta {

namespace {

/// Upper-triangular block matrix: z(i, j) for 1 ≤ i ≤ j ≤ depth holds
/// Σ_{a<n_i<…<n_j≤b} Π w_l(n_l) over the block (a, b].
class BlockMatrix {
 public:
  explicit BlockMatrix(std::size_t depth) : depth_(depth), z_(depth * depth, Real(0)) {}
  Real& operator()(std::size_t i, std::size_t j) { return z_[(i - 1) * depth_ + (j - 1)]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return z_[(i - 1) * depth_ + (j - 1)]; }

 private:
  std::size_t depth_;
  std::vector<Real> z_;
};

BlockMatrix reduce_block(std::size_t depth, long first, long last, const WeightFn& weights) {
  BlockMatrix z(depth);
  std::vector<Real> w(depth);
  for (long n = first; n <= last; ++n) {
    weights(n, w);
    // Descending j keeps z(i, j-1) at its value before index n.
    for (std::size_t j = depth; j >= 1; --j) {
      for (std::size_t i = j; i >= 1; --i) {
        if (i == j) z(i, j) += w[j - 1];
        else z(i, j) += z(i, j - 1) * w[j - 1];
      }
    }
  }
  return z;
}

void absorb(std::vector<Real>& prefix, const BlockMatrix& z, std::size_t depth) {
  for (std::size_t j = depth; j >= 1; --j) {
    Real add = 0;
    for (std::size_t l = 0; l < j; ++l) add += prefix[l] * z(l + 1, j);
    prefix[j] += add;
  }
}

}  // namespace

NestedSumResult nested_sum(std::size_t depth, long cutoff, const WeightFn& weights, std::span<const long> checkpoints,
                           bool parallel) {
  if (depth < 1) throw DomainError("nested_sum: depth must be >= 1");
  if (cutoff < 0) throw DomainError("nested_sum: cutoff must be >= 0");

  std::vector<long> bounds;
  for (long b = kBlockSize; b < cutoff; b += kBlockSize) bounds.push_back(b);
  for (long c : checkpoints) {
    if (c < 0 || c > cutoff) throw DomainError("nested_sum: checkpoint outside [0, cutoff]");
    if (c > 0) bounds.push_back(c);
  }
  if (cutoff > 0) bounds.push_back(cutoff);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  const std::size_t blocks = bounds.size();
  auto block_first = [&](std::size_t b) { return b == 0 ? 1L : bounds[b - 1] + 1; };

  std::vector<Real> prefix(depth + 1, Real(0));
  prefix[0] = 1;
  std::vector<std::pair<long, std::vector<Real>>> snapshots;
  if (std::find(checkpoints.begin(), checkpoints.end(), 0L) != checkpoints.end()) snapshots.emplace_back(0, prefix);

  if (parallel && blocks > 1) {
    std::vector<std::optional<BlockMatrix>> reduced(blocks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), blocks));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t b; (b = next.fetch_add(1)) < blocks;)
            reduced[b].emplace(reduce_block(depth, block_first(b), bounds[b], weights));
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = blocks;
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    for (std::size_t b = 0; b < blocks; ++b) {
      absorb(prefix, *reduced[b], depth);
      snapshots.emplace_back(bounds[b], prefix);
    }
  } else {
    for (std::size_t b = 0; b < blocks; ++b) {
      absorb(prefix, reduce_block(depth, block_first(b), bounds[b], weights), depth);
      snapshots.emplace_back(bounds[b], prefix);
    }
  }

  NestedSumResult out;
  out.prefix = prefix;
  out.checkpoints.reserve(checkpoints.size());
  for (long c : checkpoints) {
    auto it = std::find_if(snapshots.begin(), snapshots.end(), [c](const auto& s) { return s.first == c; });
    out.checkpoints.push_back(it->second);
  }
  return out;
}

PowerTails power_sum_tails(std::span<const unsigned> e, std::span<const Real> c, const Real& x, long cutoff,
                           unsigned digits) {
  const std::size_t q = e.size();
  if (q == 0 || c.size() != q) throw DomainError("power_sum_tails: exponent/coefficient length mismatch");
  if (e.back() < 2) throw DivergenceError("power_sum_tails: last exponent must be >= 2");
  const Real y0 = cutoff + x;
  if (!(y0 >= 2)) throw DomainError("power_sum_tails: cutoff + x must be at least 2");

  const long base_order =
      static_cast<long>(std::ceil((digits + 10) / std::log10(y0.convert_to<double>()))) + 1;
  const unsigned max_em = 80;
  const auto em = euler_maclaurin_weights(max_em);

  // Level q+1: the constant 1, exact.
  std::vector<Real> coef{Real(1)};
  Real rho = 0;
  long order = base_order;

  PowerTails out;
  out.values.assign(q + 1, Real(0));
  out.bounds.assign(q + 1, Real(0));
  out.values[q] = 1;

  for (std::size_t level = q; level-- > 0;) {
    const unsigned ei = e[level];
    const long new_order = order + ei - 1;
    std::vector<Real> next(new_order + 1, Real(0));
    // Inner remainder ρ Y^{-R}: Σ_{m>n} (m+x)^{-e-R} ≤ Y^{1-e-R}/(e+R-1).
    Real next_rho = abs(c[level]) * rho / (ei + order - 1);
    auto add = [&](long exponent, const Real& v) {
      if (exponent <= new_order) next[exponent] += v;
      else next_rho += abs(v) * pow(y0, new_order - exponent);
    };
    for (long t = 0; t < static_cast<long>(coef.size()); ++t) {
      if (coef[t] == 0) continue;
      const Real g = c[level] * coef[t];
      const long a = ei + t;
      add(a - 1, g / (a - 1));
      add(a, -g / 2);
      Real rising = a;  // (a)_{2k-1}
      for (unsigned k = 1;; ++k) {
        if (k > max_em) throw DiagnosticError("power_sum_tails: Euler-Maclaurin order exhausted");
        const long exponent = a + 2 * static_cast<long>(k) - 1;
        const Real term = g * em[k - 1] * rising;
        if (exponent > new_order) {
          // First omitted correction bounds the remainder (y^{-a} is completely monotone).
          next_rho += abs(term) * pow(y0, new_order - exponent);
          break;
        }
        next[exponent] += term;
        rising *= (a + 2 * static_cast<long>(k) - 1) * Real(a + 2 * static_cast<long>(k));
      }
    }
    coef = std::move(next);
    rho = std::move(next_rho);
    order = new_order;

    Real value = 0;
    Real inv = 1 / y0;
    Real power = 1;
    for (const auto& u : coef) {
      if (u != 0) value += u * power;
      power *= inv;
    }
    out.values[level] = value;
    out.bounds[level] = rho * pow(y0, -order);
  }
  return out;
}

}  // namespace akzeta
