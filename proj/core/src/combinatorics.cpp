#include "akzeta/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace akzeta {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("composition must have at least one part");
  for (unsigned p : parts_)
    if (p == 0) throw DomainError("composition parts must be positive");
}

Composition Composition::parse(std::string_view literal) {
  std::vector<unsigned> parts;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    if (comma == std::string_view::npos) comma = literal.size();
    std::string_view token = literal.substr(pos, comma - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw DomainError("malformed composition literal '" + std::string(literal) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

unsigned Composition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Composition Composition::with_last_shifted(int delta) const {
  auto parts = parts_;
  long last = static_cast<long>(parts.back()) + delta;
  if (last <= 0) throw DomainError("shifting the last part of " + str() + " leaves no positive part");
  parts.back() = static_cast<unsigned>(last);
  return Composition(std::move(parts));
}

std::string Composition::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

Composition dual(const Composition& c) {
  if (!c.admissible())
    throw DomainError("dual: composition " + c.str() + " is not admissible (last part must be >= 2)");

  // (a_i, b_i): a_i leading ones, then a part equal to b_i + 2.
  std::vector<std::pair<unsigned, unsigned>> blocks;
  unsigned ones = 0;
  for (unsigned p : c.parts()) {
    if (p == 1) {
      ++ones;
    } else {
      blocks.emplace_back(ones, p - 2);
      ones = 0;
    }
  }

  std::vector<unsigned> out;
  out.reserve(c.weight());
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    out.insert(out.end(), it->second, 1u);
    out.push_back(it->first + 2);
  }
  return Composition(std::move(out));
}

std::vector<Composition> admissible_compositions(unsigned weight) {
  std::vector<Composition> result;
  if (weight < 2) return result;
  // Every composition of `weight` corresponds to a subset of the weight-1 cut points.
  const unsigned cuts = weight - 1;
  for (unsigned long mask = 0; mask < (1ul << cuts); ++mask) {
    std::vector<unsigned> parts;
    unsigned run = 1;
    for (unsigned i = 0; i < cuts; ++i) {
      if (mask & (1ul << (cuts - 1 - i))) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    if (parts.back() >= 2) result.emplace_back(std::move(parts));
  }
  std::sort(result.begin(), result.end());
  return result;
}

WeakCompositions::WeakCompositions(unsigned m, std::size_t k) : m_(m), k_(k) {
  if (k == 0) throw DomainError("weak_compositions: k must be positive");
}

WeakCompositions::iterator WeakCompositions::begin() const {
  WeakComposition first{std::vector<unsigned>(k_, 0u), m_};
  first.parts.back() = m_;
  return iterator(std::move(first));
}

WeakCompositions::iterator& WeakCompositions::iterator::operator++() {
  auto& p = current_.parts;
  // Rightmost position (not the last) with a non-empty remainder after it.
  unsigned rest = 0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    rest += p[i + 1];
    if (rest > 0) {
      ++p[i];
      for (std::size_t j = i + 1; j < p.size(); ++j) p[j] = 0;
      p.back() = rest - 1;
      return *this;
    }
  }
  done_ = true;
  return *this;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.backend().data(), n, k);
  return result;
}

Integer m_coeff(std::span<const unsigned> alpha, std::span<const unsigned> d) {
  if (alpha.size() != d.size()) throw DomainError("m_coeff: length mismatch");
  Integer product = 1;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) throw DomainError("m_coeff: alpha parts must be positive");
    product *= binomial(alpha[j] + d[j] - 1, d[j]);
  }
  return product;
}

}  // namespace akzeta
