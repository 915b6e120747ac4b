#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catena/families.hpp"
#include "oracles.hpp"

using namespace catena;
using namespace catena::families;

namespace {

std::vector<int64_t> V(std::initializer_list<int64_t> v) { return std::vector<int64_t>(v); }

}  // namespace

TEST_CASE("arithmetic family validation") {
  CHECK_NOTHROW(ArithmeticFamily::create(11, 4, 4));
  CHECK_NOTHROW(ArithmeticFamily::create(2, 1, 1));
  CHECK_THROWS_AS(ArithmeticFamily::create(4, 2, 2), ValidationError);   // gcd(a, d) != 1
  CHECK_THROWS_AS(ArithmeticFamily::create(3, 1, 3), ValidationError);   // k > a-1
  CHECK_THROWS_AS(ArithmeticFamily::create(1, 1, 1), ValidationError);
  const auto fam = ArithmeticFamily::create(11, 4, 4);
  CHECK(fam.monoid().generators() == V({11, 15, 19, 23, 27}));
  CHECK(fam.monoid().embedding_dim() == 5);
}

TEST_CASE("two-coefficient membership") {
  const auto fam = ArithmeticFamily::create(11, 4, 4);
  CHECK(arithmetic_contains(fam, 111));
  CHECK(arithmetic_contains(fam, 0));
  CHECK_FALSE(arithmetic_contains(fam, -5));
  const auto small = ArithmeticFamily::create(7, 3, 2);
  for (int64_t m = 0; m <= 200; ++m)
    CHECK(arithmetic_contains(small, m) == small.monoid().contains(m));
}

TEST_CASE("optimize reproduces the worked example") {
  const auto fam = ArithmeticFamily::create(11, 4, 4);
  const auto z = Factorization::checked(fam.monoid(), 111, V({0, 1, 0, 3, 1}));
  const auto opt = optimize(fam, z);
  CHECK(opt.coeffs() == V({1, 0, 1, 0, 3}));
  const auto form = OptimizedForm::parse(opt);
  REQUIRE(form.has_value());
  CHECK(form->alpha == 1);
  CHECK(form->beta == 3);
  CHECK(form->middle_index == 2);
  // Already optimized forms are fixed points.
  CHECK(optimize(fam, opt) == opt);
}

TEST_CASE("optimize preserves element and length and lands on the unique optimized form") {
  for (const auto& [a, d, k] : std::vector<std::array<int64_t, 3>>{{9, 2, 3}, {11, 4, 4}, {5, 1, 2}}) {
    const auto fam = ArithmeticFamily::create(a, d, k);
    const auto& M = fam.monoid();
    for (int64_t m = 0; m <= 400; ++m) {
      if (!M.contains(m)) continue;
      const auto fs = enumerate(M, m);
      for (const auto& z : fs.all()) {
        const auto opt = optimize(fam, z);
        CHECK(opt.length() == z.length());
        CHECK(opt.element_of(M) == m);
        REQUIRE(OptimizedForm::parse(opt).has_value());
        // The only optimized factorization of this element and length.
        for (const auto& other : fs.all()) {
          if (other.length() != z.length() || other == opt) continue;
          if (OptimizedForm::parse(other)) CHECK(other == opt);
        }
      }
    }
  }
}

TEST_CASE("non-minimal-length inequality matches the worked example") {
  const auto fam = ArithmeticFamily::create(11, 4, 4);
  const auto z = Factorization::checked(fam.monoid(), 111, V({8, 0, 0, 1, 0}));
  const auto form = OptimizedForm::parse(z);
  REQUIRE(form.has_value());
  CHECK(form->alpha == 8);
  CHECK(form->beta == 0);
  CHECK(form->middle_index == 3);
  CHECK(is_non_minimal_length(fam, *form));  // 4*(8+0+1-4) = 20 >= 3+0+11 = 14
  CHECK(alpha_lower_bound_check(fam, *form));  // 8 >= ceil(11/4)+4-1 = 6
}

TEST_CASE("alpha = beta = 0 middle forms are minimal length") {
  for (const auto& [a, d, k] : std::vector<std::array<int64_t, 3>>{{5, 1, 2}, {7, 2, 3}, {11, 4, 4}}) {
    const auto fam = ArithmeticFamily::create(a, d, k);
    for (int64_t i = 1; i <= k - 1; ++i) {
      OptimizedForm f{0, 0, i};
      CHECK_FALSE(is_non_minimal_length(fam, f));
    }
  }
}

TEST_CASE("the non-minimal-length predicate agrees with the length set") {
  const auto fam = ArithmeticFamily::create(11, 4, 4);
  const auto& M = fam.monoid();
  for (int64_t m = 0; m <= 400; ++m) {
    if (!M.contains(m)) continue;
    const auto fs = enumerate(M, m);
    const int64_t min_len = length_profile(fs).min_length;
    for (const auto& z : fs.all()) {
      const auto form = OptimizedForm::parse(z);
      if (!form) continue;
      CHECK(is_non_minimal_length(fam, *form) == (z.length() > min_len));
    }
  }
}

TEST_CASE("alpha bound holds for all optimized non-minimal-length factorizations") {
  for (const auto& [a, d, k] : std::vector<std::array<int64_t, 3>>{{11, 4, 4}, {9, 2, 3}, {5, 3, 2}}) {
    const auto fam = ArithmeticFamily::create(a, d, k);
    const auto& M = fam.monoid();
    for (int64_t m = 0; m <= 400; ++m) {
      if (!M.contains(m)) continue;
      const auto fs = enumerate(M, m);
      const int64_t min_len = length_profile(fs).min_length;
      for (const auto& z : fs.all()) {
        const auto form = OptimizedForm::parse(z);
        if (!form || z.length() == min_len) continue;
        CHECK(alpha_lower_bound_check(fam, *form));
      }
    }
  }
}

TEST_CASE("move B reproduces the worked example") {
  const auto fam = ArithmeticFamily::create(11, 4, 4);
  CHECK(fam.catenary_closed() == 7);
  CHECK(fam.move_element() == 77);
  const auto zb = enumerate(fam.monoid(), 77);
  REQUIRE(zb.size() == 2);
  CHECK(zb[0].coeffs() == V({7, 0, 0, 0, 0}));
  CHECK(zb[1].coeffs() == V({0, 0, 0, 1, 2}));
  CHECK(fam.move_target().coeffs() == V({0, 0, 0, 1, 2}));

  const auto z = Factorization::checked(fam.monoid(), 111, V({7, 1, 1, 0, 0}));
  const auto bz = move_B(fam, z);
  CHECK(bz.coeffs() == V({0, 1, 1, 1, 2}));
  CHECK(z.length() - bz.length() == 4);
  CHECK(distance(z, bz) == 7);

  const auto b_itself = Factorization::checked(fam.monoid(), 77, V({7, 0, 0, 0, 0}));
  CHECK(move_B(fam, b_itself).coeffs() == V({0, 0, 0, 1, 2}));

  CHECK_THROWS_AS(move_B(fam, Factorization(V({6, 1, 1, 0, 0}))), ValidationError);
}

TEST_CASE("move B drops the length by d at distance exactly the catenary degree") {
  for (const auto& [a, d, k] : std::vector<std::array<int64_t, 3>>{{11, 4, 4}, {7, 3, 2}, {4, 1, 3}}) {
    const auto fam = ArithmeticFamily::create(a, d, k);
    const auto& M = fam.monoid();
    for (int64_t m = 0; m <= 400; ++m) {
      if (!M.contains(m)) continue;
      const auto fs = enumerate(M, m);
      for (const auto& z : fs.all()) {
        if (z[0] < fam.catenary_closed()) continue;
        const auto bz = move_B(fam, z);
        CHECK(bz.element_of(M) == m);
        CHECK(z.length() - bz.length() == d);
        CHECK(distance(z, bz) == fam.catenary_closed());
      }
    }
  }
}

TEST_CASE("arithmetic catenary closed form") {
  CHECK(arithmetic_catenary_closed(ArithmeticFamily::create(11, 4, 4)) == 7);
  const auto degenerate = ArithmeticFamily::create(2, 1, 1);
  CHECK(arithmetic_catenary_closed(degenerate) == 3);
  CHECK(monoid_catenary(degenerate.monoid()).value == 3);
  for (int64_t a = 3; a <= 8; ++a)
    for (int64_t d = 1; d <= 3; ++d) {
      if (gcd64(a, d) != 1) continue;
      for (int64_t k = 1; k <= std::min<int64_t>(3, a - 1); ++k) {
        const auto fam = ArithmeticFamily::create(a, d, k);
        CHECK(monoid_catenary(fam.monoid()).value == fam.catenary_closed());
      }
    }
}

TEST_CASE("generalized arithmetic equivalent degree closed form") {
  const auto f1 = GeneralizedArithmeticFamily::create(3, 2, 1);
  CHECK(f1.monoid().generators() == V({3, 7, 8}));
  CHECK(gen_arith_equivalent_closed(f1) == 5);
  CHECK(gen_arith_equivalent_closed(f1) == dim3_equivalent_closed(f1.monoid()));

  const auto f2 = GeneralizedArithmeticFamily::create(4, 2, 5);
  CHECK(f2.monoid().generators() == V({4, 13, 18}));
  CHECK(gen_arith_equivalent_closed(f2) == 14);
  CHECK(dim3_equivalent_closed(f2.monoid()) == 14);

  // gcd(h-1, d) = d when d divides h-1.
  const auto f3 = GeneralizedArithmeticFamily::create(3, 3, 2);
  CHECK(gen_arith_equivalent_closed(f3) == (3 * 3 + 2 * 2 - 3) / 2);
  CHECK(gen_arith_equivalent_closed(f3) == dim3_equivalent_closed(f3.monoid()));

  CHECK_THROWS_AS(GeneralizedArithmeticFamily::create(3, 1, 2), ValidationError);  // h < 2
  CHECK_THROWS_AS(GeneralizedArithmeticFamily::create(2, 2, 1), ValidationError);  // 2h+2d reducible
}

TEST_CASE("three-generator length step reproduces the worked move") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const auto z = Factorization::checked(M, 105, V({15, 5, 0}));
  const auto stepped = dim3_length_step(M, z, 0, 1);
  REQUIRE(stepped.has_value());
  CHECK(stepped->coeffs() == V({17, 2, 1}));
  const auto self = dim3_length_step(M, z, 0, 0);
  REQUIRE(self.has_value());
  CHECK(*self == z);
  CHECK_THROWS_AS(dim3_length_step(NumericalMonoid::create({2, 3}), Factorization(V({1, 1})), 0, 1),
                  ValidationError);
}

TEST_CASE("three-generator step map reaches every pair") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const int64_t den = M.generators()[1] - M.generators()[0];
  for (int64_t m = 0; m <= 300; ++m) {
    if (!M.contains(m)) continue;
    const auto fs = enumerate(M, m);
    for (const auto& z : fs.all())
      for (const auto& w : fs.all()) {
        const int64_t l = z.length() - w.length();
        const int64_t k = w[2] - z[2];
        const auto img = dim3_length_step(M, z, l, k);
        REQUIRE(img.has_value());
        CHECK(*img == w);
        (void)den;
      }
  }
}

TEST_CASE("same-length factorizations differ by the primitive lattice step") {
  for (const auto& gens : {std::vector<int64_t>{4, 9, 19}, {5, 6, 19}, {3, 7, 8}}) {
    const auto M = NumericalMonoid::create(gens);
    const int64_t g = gcd64(gens[2] - gens[0], gens[1] - gens[0]);
    const int64_t v0 = (gens[2] - gens[1]) / g, v1 = (gens[2] - gens[0]) / g, v2 = (gens[1] - gens[0]) / g;
    for (int64_t m = 0; m <= 250; ++m) {
      if (!M.contains(m)) continue;
      const auto fs = enumerate(M, m);
      for (const auto& [len, idx] : fs.by_length()) {
        for (size_t i = 0; i < idx.size(); ++i)
          for (size_t j = i + 1; j < idx.size(); ++j) {
            const auto &a = fs[idx[i]], &b = fs[idx[j]];
            const int64_t t = (b[2] - a[2]) / v2;
            CHECK(t * v2 == b[2] - a[2]);
            CHECK(b[0] - a[0] == t * v0);
            CHECK(b[1] - a[1] == -t * v1);
          }
      }
    }
  }
}

TEST_CASE("equivalent degree classification by the dissonance threshold") {
  const auto M = NumericalMonoid::create({4, 9, 19});
  const int64_t c_eq = dim3_equivalent_closed(M);
  CHECK(c_eq == 3);
  CHECK(dim3_equivalent_classify(M, 9 * c_eq) == c_eq);  // x = 0
  const int64_t bound = dim3_dissonance_bound(M);
  for (int64_t m = bound + 1; m <= bound + 30; ++m) CHECK(dim3_equivalent_classify(M, m) == c_eq);
  for (int64_t m = M.multiplicity(); m <= bound + 50; ++m) {
    if (!M.contains(m)) continue;
    CHECK(dim3_equivalent_classify(M, m) == equivalent(M, m));
  }
}

TEST_CASE("classification matches the direct computation on random three-generator monoids") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int64_t> pick(4, 24);
  int done = 0;
  while (done < 6) {
    std::set<int64_t> s{pick(rng), pick(rng), pick(rng)};
    if (s.size() != 3) continue;
    std::vector<int64_t> gens(s.begin(), s.end());
    int64_t g = 0;
    for (int64_t x : gens) g = gcd64(g, x);
    if (g != 1) continue;
    const auto M = NumericalMonoid::create(gens);
    if (M.embedding_dim() != 3) continue;
    const int64_t bound = std::min<int64_t>(dim3_dissonance_bound(M) + 20, 900);
    for (int64_t m = M.multiplicity(); m <= bound; ++m) {
      if (!M.contains(m)) continue;
      CHECK(dim3_equivalent_classify(M, m) == equivalent(M, m));
    }
    ++done;
  }
}

TEST_CASE("gap family validation and closed forms") {
  const auto f1 = GapFamily::create(1, 4, 2);
  CHECK(f1.monoid().generators() == V({4, 5, 11}));
  const auto inv1 = gap_family_invariants(f1);
  CHECK(inv1.c_eq == 7);
  CHECK(inv1.c_mon == 7);
  CHECK(inv1.adj_below_eq);
  CHECK(inv1.mon_exceeds_c);

  const auto f2 = GapFamily::create(2, 3, 2);
  CHECK(f2.monoid().generators() == V({6, 8, 17}));
  CHECK(gap_family_invariants(f2).c_eq == 11);

  CHECK_THROWS_AS(GapFamily::create(1, 2, 2), ValidationError);  // <2,3,7> is not minimal
  CHECK_THROWS_AS(GapFamily::create(1, 4, 1), ValidationError);  // x < 2
}

TEST_CASE("frobenius family invariants at a = 5") {
  const auto fam = FrobeniusFamily::create(5);
  CHECK(fam.monoid().generators() == V({5, 6, 19}));
  CHECK(fam.x() == 8);
  CHECK(fam.in_gap_hypothesis());
  const auto inv = frobenius_family_invariants(fam);
  CHECK(inv.betti == V({24, 25, 38}));
  CHECK(inv.betti == inv.betti_closed);
  CHECK(inv.c == 7);
  CHECK(inv.c == inv.c_closed);
  CHECK(inv.c_mon == 14);
  CHECK(inv.c_mon == inv.c_mon_closed);
  CHECK(inv.gap == 7);
  CHECK(inv.gap == inv.gap_formula_derived);
  CHECK(inv.gap != inv.gap_formula_printed);
}

TEST_CASE("frobenius family boundary case a = 4") {
  const auto fam = FrobeniusFamily::create(4);
  CHECK(fam.monoid().generators() == V({4, 5, 11}));
  const auto inv = frobenius_family_invariants(fam);
  CHECK(inv.c == 5);  // 2*4 - 3, confirmed by the Betti scan inside
  CHECK(inv.c == inv.c_closed);
  CHECK_THROWS_AS(FrobeniusFamily::create(3), ValidationError);
}

TEST_CASE("frobenius family gap grows strictly") {
  int64_t prev = -1;
  for (int64_t a = 5; a <= 9; ++a) {
    const auto inv = frobenius_family_invariants(FrobeniusFamily::create(a));
    CHECK(inv.gap > prev);
    prev = inv.gap;
  }
}
