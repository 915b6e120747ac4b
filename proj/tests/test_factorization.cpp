#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "catena/factorization.hpp"
#include "oracles.hpp"

using catena::enumerate;
using catena::Factorization;
using catena::NumericalMonoid;

namespace {

std::vector<int64_t> V(std::initializer_list<int64_t> v) { return std::vector<int64_t>(v); }

}  // namespace

TEST_CASE("Z(25) in <5,7,9> has exactly the two known factorizations") {
  const auto M = NumericalMonoid::create({5, 7, 9});
  const auto fs = enumerate(M, 25);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].coeffs() == V({5, 0, 0}));
  CHECK(fs[1].coeffs() == V({0, 1, 2}));
}

TEST_CASE("Z(0) is the zero vector") {
  const auto M = NumericalMonoid::create({5, 7, 9});
  const auto fs = enumerate(M, 0);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].coeffs() == V({0, 0, 0}));
  CHECK(fs[0].length() == 0);
}

TEST_CASE("Z(105) in <4,9,19> lists the ten known factorizations by length") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const auto fs = enumerate(M, 105);
  REQUIRE(fs.size() == 10);
  const auto& by_len = fs.by_length();
  REQUIRE(by_len.size() == 4);
  auto class_of = [&](int64_t len) {
    std::vector<std::vector<int64_t>> out;
    for (int32_t i : by_len.at(len)) out.push_back(fs[i].coeffs());
    std::sort(out.begin(), out.end());
    return out;
  };
  CHECK(class_of(25) == std::vector<std::vector<int64_t>>{{24, 1, 0}});
  CHECK(class_of(20) == std::vector<std::vector<int64_t>>{{15, 5, 0}, {17, 2, 1}});
  CHECK(class_of(15) ==
        std::vector<std::vector<int64_t>>{{6, 9, 0}, {8, 6, 1}, {10, 3, 2}, {12, 0, 3}});
  CHECK(class_of(10) == std::vector<std::vector<int64_t>>{{1, 7, 2}, {3, 4, 3}, {5, 1, 4}});
}

TEST_CASE("enumeration is canonical: lexicographically descending, deterministic") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const auto fs = enumerate(M, 105);
  for (size_t i = 1; i < fs.size(); ++i) CHECK(fs[i - 1].coeffs() > fs[i].coeffs());
  const auto fs2 = enumerate(M, 105);
  REQUIRE(fs.size() == fs2.size());
  for (size_t i = 0; i < fs.size(); ++i) CHECK(fs[i] == fs2[i]);
}

TEST_CASE("empty set iff the element is not in the monoid") {
  const auto M = NumericalMonoid::create({5, 7, 9});
  for (int64_t m = 0; m <= 120; ++m) CHECK(enumerate(M, m).empty() == !M.contains(m));
  CHECK_THROWS_AS(enumerate(M, -1), catena::ValidationError);
}

TEST_CASE("every entry factors the element; counts match nested loops") {
  for (const auto& gens : {std::vector<int64_t>{5, 7, 9}, {3, 5, 7}, {4, 9, 19}, {2, 3}}) {
    const auto M = NumericalMonoid::create(gens);
    for (int64_t m = 0; m <= 200; ++m) {
      const auto fs = enumerate(M, m);
      auto brute = oracle::enumerate_upto3(M.generators(), m);
      CHECK(fs.size() == brute.size());
      for (const auto& z : fs.all()) CHECK(z.element_of(M) == m);
    }
  }
}

TEST_CASE("by_length partitions the set") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const auto fs = enumerate(M, 105);
  size_t total = 0;
  for (const auto& [len, idx] : fs.by_length()) {
    total += idx.size();
    for (int32_t i : idx) CHECK(fs[i].length() == len);
  }
  CHECK(total == fs.size());
}

TEST_CASE("explosion guard trips past the cap") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  CHECK_THROWS_AS(enumerate(M, 105, 5), catena::GuardError);
  CHECK_NOTHROW(enumerate(M, 105, 10));
}

TEST_CASE("gcd of factorizations") {
  Factorization a(V({5, 0, 0})), b(V({0, 1, 2}));
  CHECK(catena::gcd_fact(a, b) == V({0, 0, 0}));
  CHECK(catena::gcd_fact(a, a) == a.coeffs());
  Factorization z(V({7, 1, 1, 0, 0})), bz(V({0, 1, 1, 1, 2}));
  CHECK(catena::gcd_fact(z, bz) == V({0, 1, 1, 0, 0}));
  CHECK_THROWS_AS(catena::gcd_fact(a, z), catena::ValidationError);
}

TEST_CASE("distance") {
  Factorization z(V({7, 1, 1, 0, 0})), bz(V({0, 1, 1, 1, 2}));
  CHECK(catena::distance(z, bz) == 7);
  CHECK(catena::distance(z, z) == 0);
  Factorization a(V({5, 0, 0})), b(V({0, 1, 2}));
  CHECK(catena::distance(a, b) == 5);
  CHECK(catena::distance(a, b) == oracle::distance(a.coeffs(), b.coeffs()));
}

TEST_CASE("metric axioms hold on enumerated sets") {
  for (const auto& [gens, m] : std::vector<std::pair<std::vector<int64_t>, int64_t>>{
           {{4, 9, 19}, 105}, {{5, 7, 9}, 100}, {{3, 5, 7}, 60}, {{5, 6, 19}, 76}}) {
    const auto M = NumericalMonoid::create(gens);
    const auto fs = enumerate(M, m);
    REQUIRE(fs.size() <= 200);
    for (size_t i = 0; i < fs.size(); ++i)
      for (size_t j = 0; j < fs.size(); ++j) {
        const int64_t dij = catena::distance(fs[i], fs[j]);
        CHECK((dij == 0) == (i == j));
        CHECK(dij == catena::distance(fs[j], fs[i]));
        for (size_t k = 0; k < fs.size(); ++k)
          CHECK(catena::distance(fs[i], fs[k]) <= dij + catena::distance(fs[j], fs[k]));
      }
  }
}

TEST_CASE("length profile of 105 in <4,9,19>") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const auto p = catena::length_profile(enumerate(M, 105));
  CHECK(p.lengths == V({10, 15, 20, 25}));
  CHECK(p.min_length == 10);
  CHECK(p.max_length == 25);
  CHECK(p.delta == V({5}));
}

TEST_CASE("length profile edge cases") {
  const auto M = NumericalMonoid::create({5, 7, 9});
  const auto p = catena::length_profile(enumerate(M, 5));
  CHECK(p.lengths == V({1}));
  CHECK(p.delta.empty());
  CHECK_THROWS_AS(catena::length_profile(enumerate(M, 1)), catena::ValidationError);
}

TEST_CASE("arithmetic monoid delta sets stay within {d}") {
  const auto M = NumericalMonoid::create({11, 15, 19, 23, 27});
  const auto p = catena::length_profile(enumerate(M, 111));
  for (int64_t d : p.delta) CHECK(d == 4);
}

TEST_CASE("table-based profile agrees with the enumerated profile") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> pick(3, 24);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int64_t> gens{pick(rng), pick(rng), pick(rng)};
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    int64_t g = 0;
    for (int64_t x : gens) g = catena::gcd64(g, x);
    if (g != 1) continue;
    const auto M = NumericalMonoid::create(gens);
    for (int64_t m = 0; m <= 150; ++m) {
      if (!M.contains(m)) continue;
      const auto a = catena::length_profile(enumerate(M, m));
      const auto b = catena::length_profile_of(M, m);
      CHECK(a.lengths == b.lengths);
      CHECK(a.delta == b.delta);
    }
  }
}

TEST_CASE("factorization construction validates") {
  CHECK_THROWS_AS(Factorization(V({1, -1})), catena::ValidationError);
  const auto M = NumericalMonoid::create({5, 7, 9});
  CHECK_THROWS_AS(Factorization::checked(M, 25, V({4, 0, 0})), catena::ValidationError);
  CHECK_NOTHROW(Factorization::checked(M, 25, V({5, 0, 0})));
}
