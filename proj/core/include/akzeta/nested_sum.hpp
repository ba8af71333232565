#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "akzeta/types.hpp"

namespace akzeta {

/// Fills w[0..depth-1] with the weights w_1(n), …, w_depth(n) of index n.
/// Must be safe to call concurrently for different n.
using WeightFn = std::function<void(long n, std::span<Real> w)>;

struct NestedSumResult {
  /// P_j(N) = Σ_{n_1<…<n_j≤N} Π_i w_i(n_i) for j = 0..depth (P_0 = 1).
  std::vector<Real> prefix;
  /// The same prefix vector after index c, for every requested checkpoint c.
  std::vector<std::vector<Real>> checkpoints;
};

/// Nested sums over 1..cutoff. The range is cut into fixed blocks (every
/// kBlockSize indices and at every checkpoint); each block is reduced to an
/// upper-triangular matrix of partial nested sums and the blocks are combined
/// in index order. `parallel` only distributes the block reductions over
/// threads, so both modes give bit-identical results.
NestedSumResult nested_sum(std::size_t depth, long cutoff, const WeightFn& weights,
                           std::span<const long> checkpoints = {}, bool parallel = false);

inline constexpr long kBlockSize = 2048;

/// Tails of pure power nested sums with weights c_i (n + x)^{-e_i}:
///   U_i(N) = Σ_{N<n_i<…<n_q} Π_{l≥i} c_l (n_l + x)^{-e_l},  i = 1..q+1,
/// from a nested Euler–Maclaurin expansion in 1/(N + x). Requires e_q ≥ 2.
/// bounds[i] is a rigorous bound on the truncation error of values[i].
struct PowerTails {
  std::vector<Real> values;
  std::vector<Real> bounds;
};

PowerTails power_sum_tails(std::span<const unsigned> e, std::span<const Real> c, const Real& x, long cutoff,
                           unsigned digits);

}  // namespace akzeta
