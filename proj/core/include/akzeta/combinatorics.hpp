#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "akzeta/types.hpp"

namespace akzeta {

/// Exponent tuple of a (Hurwitz) multiple zeta value, innermost index first.
///
/// The final "+1" of the usual ζ(α_1, …, α_q + 1) notation is folded into the
/// last stored part, so Composition{1, 2} denotes ζ(1, 2) = Σ_{n1<n2} 1/(n1 n2²).
/// The same type carries raw polylogarithm and beta-sum index tuples, where
/// no folding takes place and the last part may be 1.
class Composition {
 public:
  /// Throws DomainError when `parts` is empty or contains a zero.
  explicit Composition(std::vector<unsigned> parts);
  Composition(std::initializer_list<unsigned> parts)
      : Composition(std::vector<unsigned>(parts)) {}

  /// Parses the literal syntax "1,2,2,4" (whitespace tolerated).
  static Composition parse(std::string_view literal);

  std::span<const unsigned> parts() const { return parts_; }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  unsigned back() const { return parts_.back(); }

  unsigned weight() const;
  std::size_t depth() const { return parts_.size(); }
  bool admissible() const { return parts_.back() >= 2; }

  /// Same parts with the last one changed by `delta`; throws DomainError if
  /// the result would contain a zero.
  Composition with_last_shifted(int delta) const;

  std::string str() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
};

inline unsigned weight(const Composition& c) { return c.weight(); }
inline std::size_t depth(const Composition& c) { return c.depth(); }

/// MZV duality: factor c as ({1}^{a_1}, b_1+2, …, {1}^{a_k}, b_k+2) and emit
/// ({1}^{b_k}, a_k+2, …, {1}^{b_1}, a_1+2). Involutive and weight preserving.
/// Throws DomainError for non-admissible input.
Composition dual(const Composition& c);

/// All admissible compositions of the given weight (2^{w-2} of them), in
/// lexicographic order.
std::vector<Composition> admissible_compositions(unsigned weight);

struct WeakComposition {
  std::vector<unsigned> parts;
  unsigned total = 0;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
};

/// Lexicographic enumeration of k-tuples of non-negative integers summing to m.
class WeakCompositions {
 public:
  WeakCompositions(unsigned m, std::size_t k);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = WeakComposition;
    using difference_type = std::ptrdiff_t;
    using pointer = const WeakComposition*;
    using reference = const WeakComposition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

   private:
    friend class WeakCompositions;
    explicit iterator(WeakComposition first) : current_(std::move(first)), done_(false) {}

    WeakComposition current_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }

 private:
  unsigned m_;
  std::size_t k_;
};

inline WeakCompositions weak_compositions(unsigned m, std::size_t k) { return {m, k}; }

/// Exact C(n, k); zero when k > n.
Integer binomial(unsigned long n, unsigned long k);

/// Π_j C(alpha_j + d_j - 1, d_j). Lengths must match.
Integer m_coeff(std::span<const unsigned> alpha, std::span<const unsigned> d);

}  // namespace akzeta
