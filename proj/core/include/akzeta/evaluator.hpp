#pragma once

#include "akzeta/combinatorics.hpp"
#include "akzeta/numerics.hpp"
#include "akzeta/types.hpp"

namespace akzeta {

// All evaluators work at the current Real default precision; wrap calls in a
// ScopedPrecision(ctx) before the first one. They are pure otherwise.

/// Cutoff used by the multiple zeta evaluators unless ctx.cutoff is set.
inline constexpr long kDefaultMzvCutoff = 1000;
/// Cutoff used by the p = 1 (slowly convergent) series unless ctx.cutoff is set.
inline constexpr long kDefaultSlowCutoff = 1L << 17;

/// ζ(e; x) = Σ_{n_1<…<n_q} Π (n_i + x)^{-e_i}. Partial nested sum to N plus
/// a nested Euler–Maclaurin expansion of every tail; the bound is rigorous.
/// Throws DivergenceError for non-admissible e, DomainError for x ≤ -1.
Evaluation eval_hurwitz_mzv(const Composition& e, const Real& x, const PrecisionContext& ctx);

/// t(e) = Σ_{n_1<…<n_q} Π (2n_i - 1)^{-e_i}, summed over odd denominators directly.
Evaluation eval_t(const Composition& e, const PrecisionContext& ctx);

/// Li_v(z) = Σ_{n_1<…<n_k} z^{n_k} / Π n_i^{v_i} for |z| < 1 (geometric bound),
/// or z = 1 with v admissible (evaluated as ζ(v; 0)).
Evaluation eval_li(const Composition& v, const Real& z, const PrecisionContext& ctx);

/// Z^v_p(m+1; x) = Σ_{n_1<…<n_k} B(n_k, 1+x) P_m(H_{n_k}(x)) / (p^{n_k} Π n_i^{v_i}).
/// p > 1: rigorous geometric tail bound. p = 1: tail from tail_fit, estimated.
Evaluation eval_ak_lhs(const Composition& v, const Real& p, unsigned m, const Real& x, const PrecisionContext& ctx);

/// Σ_{|d|=m, d∈N^q} M_{q-1}(α,d) C(α_q+d_q, d_q) ζ(α_1+d_1, …, α_q+d_q+1; x)
/// for the raw index α = (α_1, …, α_q) (the trailing +1 is added here).
Evaluation eval_ak_rhs(const Composition& alpha, unsigned m, const Real& x, const PrecisionContext& ctx);

/// Same quantity summed over (q+1)-tuples:
/// Σ_{|d|=m} M_q(α,d) ζ(α_1+d_1, …, α_q+d_q+d_{q+1}+1; x).
Evaluation eval_ak_rhs_expanded(const Composition& alpha, unsigned m, const Real& x, const PrecisionContext& ctx);

/// Σ_{k_1<…<k_r} 4^{k_r} P_m(O_{k_r}) / (C(2k_r,k_r) p^{k_r} k_1^{β_1} ⋯ k_r^{β_r+1}),
/// with O_n^{(j)} = Σ_{i≤n} (2i-1)^{-j}. p = 1 uses tail_fit (estimated).
Evaluation eval_inverse_binomial(const Composition& beta, unsigned m, const Real& p, const PrecisionContext& ctx);

/// Σ_{n≥1} (-1)^{n+1} H_n^{(s)}(x) / (n (p-1)^n) for p ≥ 2. p > 2: direct
/// summation, rigorous alternating bound. p = 2: accelerated, estimated.
Evaluation eval_euler_transform(const Real& p, unsigned s, const Real& x, const PrecisionContext& ctx);

/// Σ_{m<terms} z^m Z^β_1(m+1; x), β = dual(α) with its last part lowered by
/// one, approximating ζ(α; x - z). Requires |z| < x + 1. Estimated bound
/// including a geometric estimate of the omitted terms.
Evaluation eval_prop2_series(const Composition& alpha, const Real& x, const Real& z, unsigned terms,
                             const PrecisionContext& ctx);

/// Σ over n_1<…<n_k ≤ n_max of the Z^v_p(m+1; x) summand, exactly.
Rational ak_lhs_truncated_exact(const Composition& v, const Rational& p, unsigned m, const Rational& x, unsigned n_max);

/// The same truncation with B(n,1+x) P_m(H_n(x)) replaced by D(λ_{m+1,x})(n).
Rational ak_lhs_truncated_d_operator(const Composition& v, const Rational& p, unsigned m, const Rational& x,
                                     unsigned n_max);

}  // namespace akzeta
