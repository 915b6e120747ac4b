#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catena/catenary.hpp"
#include "catena/factorization.hpp"
#include "catena/monoid.hpp"

namespace catena::families {

// Monoid generated by a, a+d, ..., a+kd. Requires a >= 2, d >= 1,
// 1 <= k <= a-1, gcd(a, d) = 1, and that the tuple is the minimal
// generating set of its monoid.
class ArithmeticFamily {
 public:
  static ArithmeticFamily create(int64_t a, int64_t d, int64_t k);

  int64_t a() const { return a_; }
  int64_t d() const { return d_; }
  int64_t k() const { return k_; }
  const NumericalMonoid& monoid() const { return monoid_; }

  // ceil(a/k) + d.
  int64_t catenary_closed() const { return cat_; }
  // b = a * (ceil(a/k) + d), the pivot element of the length-changing move.
  int64_t move_element() const { return b_; }
  // Canonical maximum-length factorization of b with zero first coordinate.
  const Factorization& move_target() const { return z0_; }

 private:
  ArithmeticFamily(int64_t a, int64_t d, int64_t k, NumericalMonoid M, Factorization z0);
  int64_t a_, d_, k_, cat_, b_;
  NumericalMonoid monoid_;
  Factorization z0_;
};

// Shape (alpha, 0, ..., 0, 1, 0, ..., 0, beta) or (alpha, 0, ..., 0, beta);
// the single interior 1 sits at middle_index when present.
struct OptimizedForm {
  int64_t alpha = 0;
  int64_t beta = 0;
  std::optional<int64_t> middle_index;

  static std::optional<OptimizedForm> parse(const Factorization& z);
  std::vector<int64_t> to_coeffs(int64_t dim) const;
};

// Membership by the two-coefficient criterion: m = c1*a + c2*d with
// k*c1 >= c2 for some c1, c2 >= 0. Agrees with monoid membership.
bool arithmetic_contains(const ArithmeticFamily& fam, int64_t m);

// The unique optimized factorization with the same element and length.
Factorization optimize(const ArithmeticFamily& fam, const Factorization& z);

// True iff the optimized form admits a shorter factorization of its element:
// k(alpha+beta+1-d) >= i + beta*k + a (middle form), or
// k(alpha+beta-d) >= beta*k + a (two-block form).
bool is_non_minimal_length(const ArithmeticFamily& fam, const OptimizedForm& f);

// alpha >= ceil(a/k) + d - 1; always true for optimized non-minimal-length
// factorizations.
bool alpha_lower_bound_check(const ArithmeticFamily& fam, const OptimizedForm& f);

// Bz = z - (c(M), 0, ..., 0) + z0. Requires z[0] >= c(M). Drops the length
// by exactly d at distance exactly c(M).
Factorization move_B(const ArithmeticFamily& fam, const Factorization& z);

int64_t arithmetic_catenary_closed(const ArithmeticFamily& fam);

// Monoid generated by a, ah+d, ah+2d with h >= 2 and gcd(a, d) = 1.
class GeneralizedArithmeticFamily {
 public:
  static GeneralizedArithmeticFamily create(int64_t a, int64_t h, int64_t d);
  int64_t a() const { return a_; }
  int64_t h() const { return h_; }
  int64_t d() const { return d_; }
  const NumericalMonoid& monoid() const { return monoid_; }

 private:
  GeneralizedArithmeticFamily(int64_t a, int64_t h, int64_t d, NumericalMonoid M);
  int64_t a_, h_, d_;
  NumericalMonoid monoid_;
};

// (ah + 2d - a) / gcd(h - 1, d); equals the three-generator closed form of
// the constructed monoid.
int64_t gen_arith_equivalent_closed(const GeneralizedArithmeticFamily& fam);

// Monoid generated by na, na+n, 2na+nx+1 with x >= 2.
class GapFamily {
 public:
  static GapFamily create(int64_t n, int64_t a, int64_t x);
  int64_t n() const { return n_; }
  int64_t a() const { return a_; }
  int64_t x() const { return x_; }
  const NumericalMonoid& monoid() const { return monoid_; }

 private:
  GapFamily(int64_t n, int64_t a, int64_t x, NumericalMonoid M);
  int64_t n_, a_, x_;
  NumericalMonoid monoid_;
};

struct GapFamilyInvariants {
  int64_t c_eq = 0;           // na + nx + 1, exact
  InvariantReport c_adj;      // bounded scan, observed
  int64_t c_mon = 0;          // na + nx + 1, exact
  InvariantReport c;          // Betti scan, exact
  bool adj_below_eq = false;  // observed c_adj < c_eq
  bool mon_exceeds_c = false; // c_mon > c
};

GapFamilyInvariants gap_family_invariants(const GapFamily& fam);

// Monoid generated by a, a+1 and the Frobenius number of <a, a+1>, which is
// a^2 - a - 1. This is the gap family at n = 1, x = a^2 - 3a - 2.
class FrobeniusFamily {
 public:
  static FrobeniusFamily create(int64_t a);
  int64_t a() const { return a_; }
  // Gap-family parameter x with 2a + x + 1 = a^2 - a - 1.
  int64_t x() const { return x_; }
  bool in_gap_hypothesis() const { return x_ >= 2; }
  const NumericalMonoid& monoid() const { return monoid_; }

 private:
  FrobeniusFamily(int64_t a, int64_t x, NumericalMonoid M);
  int64_t a_, x_;
  NumericalMonoid monoid_;
};

struct FrobeniusFamilyInvariants {
  std::vector<int64_t> betti;          // scanned, ascending
  std::vector<int64_t> betti_closed;   // {a^2-1, a^2, 2(a^2-a-1)}
  int64_t c = 0;                       // Betti scan
  int64_t c_closed = 0;                // 2a - 3
  int64_t c_mon = 0;                   // max(closed-form c_eq, scanned c_adj)
  int64_t c_mon_closed = 0;            // a^2 - 2a - 1
  InvariantReport c_adj;               // bounded scan, observed
  int64_t gap = 0;                     // c_mon - c, computed
  int64_t gap_formula_derived = 0;     // a^2 - 4a + 2
  int64_t gap_formula_printed = 0;     // a^2 - 4a - 4
};

FrobeniusFamilyInvariants frobenius_family_invariants(const FrobeniusFamily& fam);

// Scan bound used for the observed adjacent degree of gap-type families:
// 3 * (F(M) + n3).
int64_t gap_adjacent_scan_bound(const NumericalMonoid& M);

// ---------------------------------------------------------------------------
// Three-generator step maps and classification.
// ---------------------------------------------------------------------------

// The coordinate map that relates a factorization (b, c, d) to the
// factorization of length |z| - l with third coordinate d + k:
//   (b - (l*n1 - k(n3-n1))/(n2-n1) - k - l,
//    c + (l*n1 - k(n3-n1))/(n2-n1),
//    d + k).
// Returns the image when it is a non-negative integer triple.
std::optional<Factorization> dim3_length_step(const NumericalMonoid& M, const Factorization& z,
                                              int64_t l, int64_t k);

// Threshold past which the element-wise equivalent degree is constant:
// n2 * c_eq(M) + F(M).
int64_t dim3_dissonance_bound(const NumericalMonoid& M);

// c_eq(M) if m - n2*c_eq(M) is in M, else 0.
int64_t dim3_equivalent_classify(const NumericalMonoid& M, int64_t m);

}  // namespace catena::families
