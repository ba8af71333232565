#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "akzeta/combinatorics.hpp"
#include "support.hpp"

using namespace akzeta;

TEST_CASE("composition literal parsing and accessors") {
  const auto c = Composition::parse("1, 2,2,4");
  CHECK(c.depth() == 4);
  CHECK(c.weight() == 9);
  CHECK(c.admissible());
  CHECK(c.str() == "1,2,2,4");
  CHECK_FALSE(Composition::parse("2,1").admissible());
  CHECK(weight(Composition{1, 2}) == 3);
  CHECK(depth(Composition{1, 2, 2, 4}) == 4);
  CHECK_THROWS_AS(Composition::parse(""), DomainError);
  CHECK_THROWS_AS(Composition::parse("1,0,2"), DomainError);
  CHECK_THROWS_AS(Composition::parse("1,x"), DomainError);
  CHECK_THROWS_AS(Composition(std::vector<unsigned>{}), DomainError);
  CHECK(Composition{1, 3}.with_last_shifted(-1) == Composition{1, 2});
  CHECK_THROWS_AS((Composition{2, 1}.with_last_shifted(-1)), DomainError);
}

TEST_CASE("dual on small hand-worked cases") {
  CHECK(dual(Composition{1, 2}) == Composition{3});
  CHECK(dual(Composition{2}) == Composition{2});
  CHECK(dual(Composition{3}) == Composition{1, 2});
  CHECK(dual(Composition{1, 1, 2}) == Composition{4});
  CHECK(dual(dual(Composition{1, 2, 2, 4})) == Composition{1, 2, 2, 4});
  CHECK(weight(dual(Composition{1, 3})) == 4);
  CHECK_THROWS_AS(dual(Composition{1, 1}), DomainError);
}

TEST_CASE("dual agrees with the word-reversal construction up to weight 12") {
  for (unsigned w = 2; w <= 12; ++w) {
    const auto all = admissible_compositions(w);
    CHECK(all.size() == (std::size_t{1} << (w - 2)));
    for (const auto& c : all) {
      const auto d = dual(c);
      REQUIRE(d == oracle::dual_by_words(c));
      CHECK(d.admissible());
      CHECK(dual(d) == c);
      CHECK(d.weight() == c.weight());
      CHECK(c.depth() + d.depth() == c.weight());
    }
  }
}

TEST_CASE("admissible compositions are distinct, admissible and ordered") {
  const auto all = admissible_compositions(6);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (const auto& c : all) {
    CHECK(c.admissible());
    CHECK(c.weight() == 6);
  }
}

TEST_CASE("weak compositions") {
  std::vector<std::vector<unsigned>> got;
  for (const auto& d : weak_compositions(2, 2)) got.push_back(d.parts);
  CHECK(got == std::vector<std::vector<unsigned>>{{0, 2}, {1, 1}, {2, 0}});

  got.clear();
  for (const auto& d : weak_compositions(0, 3)) got.push_back(d.parts);
  CHECK(got == std::vector<std::vector<unsigned>>{{0, 0, 0}});

  for (unsigned m = 0; m <= 6; ++m) {
    for (std::size_t k = 1; k <= 5; ++k) {
      std::vector<std::vector<unsigned>> seen;
      for (const auto& d : weak_compositions(m, k)) {
        CHECK(d.parts.size() == k);
        unsigned sum = 0;
        for (unsigned v : d.parts) sum += v;
        CHECK(sum == m);
        CHECK(d.total == m);
        seen.push_back(d.parts);
      }
      CHECK(std::is_sorted(seen.begin(), seen.end()));
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
      CHECK(Integer(seen.size()) == binomial(m + k - 1, k - 1));
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(3, 5) == 0);
  // Pascal's rule well beyond 64-bit range.
  for (unsigned long n = 1; n <= 120; n += 7)
    for (unsigned long k = 1; k <= n; k += 3) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(100, 50) > Integer(std::numeric_limits<unsigned long long>::max()));
}

TEST_CASE("m_coeff") {
  const std::vector<unsigned> a{1, 2}, d{1, 1};
  CHECK(m_coeff(a, d) == 2);
  const std::vector<unsigned> a3{3}, d2{2};
  CHECK(m_coeff(a3, d2) == 6);
  const std::vector<unsigned> a4{5, 1, 7}, zeros{0, 0, 0};
  CHECK(m_coeff(a4, zeros) == 1);
  const std::vector<unsigned> empty;
  CHECK(m_coeff(empty, empty) == 1);
  CHECK_THROWS_AS(m_coeff(a, d2), DomainError);

  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> part(1, 6), shift(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<unsigned, unsigned>> pairs(4);
    for (auto& [x, y] : pairs) x = part(rng), y = shift(rng);
    auto coeff = [](const std::vector<std::pair<unsigned, unsigned>>& ps) {
      std::vector<unsigned> al, dl;
      for (auto [x, y] : ps) al.push_back(x), dl.push_back(y);
      return m_coeff(al, dl);
    };
    const Integer before = coeff(pairs);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    CHECK(coeff(pairs) == before);
  }
}
