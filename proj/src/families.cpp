#include "catena/families.hpp"

#include <algorithm>
#include <string>

namespace catena::families {

namespace {

NumericalMonoid minimal_family_monoid(const std::vector<int64_t>& gens, const std::string& what) {
  NumericalMonoid M = NumericalMonoid::create(gens);
  if (M.generators() != gens)
    fail(errc::invalid_family,
         what + ": generator tuple is not a minimal generating set");
  return M;
}

}  // namespace

// ---------------------------------------------------------------------------
// ArithmeticFamily
// ---------------------------------------------------------------------------

ArithmeticFamily::ArithmeticFamily(int64_t a, int64_t d, int64_t k, NumericalMonoid M, Factorization z0)
    : a_(a), d_(d), k_(k), cat_(ceil_div(a, k) + d), b_(checked_mul(a, cat_)), monoid_(std::move(M)),
      z0_(std::move(z0)) {}

ArithmeticFamily ArithmeticFamily::create(int64_t a, int64_t d, int64_t k) {
  if (a < 2) fail(errc::invalid_family, "arithmetic family requires a >= 2");
  if (d < 1) fail(errc::invalid_family, "arithmetic family requires d >= 1");
  if (k < 1 || k > a - 1) fail(errc::invalid_family, "arithmetic family requires 1 <= k <= a-1");
  if (gcd64(a, d) != 1) fail(errc::invalid_family, "arithmetic family requires gcd(a, d) = 1");
  std::vector<int64_t> gens;
  for (int64_t i = 0; i <= k; ++i) gens.push_back(checked_add(a, checked_mul(i, d)));
  NumericalMonoid M = minimal_family_monoid(gens, "arithmetic family");

  // z0: canonical maximum-length factorization of b over the later
  // generators (zero first coordinate). Guaranteed to exist.
  const int64_t cat = ceil_div(a, k) + d;
  const int64_t b = checked_mul(a, cat);
  const FactorizationSet zb = enumerate(M, b);
  const Factorization* best = nullptr;
  for (const auto& z : zb.all()) {
    if (z[0] != 0) continue;
    if (!best || z.length() > best->length()) best = &z;
  }
  if (!best)
    fail(errc::no_target_factorization,
         "no factorization of the move element avoids the first generator");
  return ArithmeticFamily(a, d, k, std::move(M), *best);
}

std::optional<OptimizedForm> OptimizedForm::parse(const Factorization& z) {
  const size_t dim = z.dim();
  if (dim < 2) return std::nullopt;
  OptimizedForm f;
  f.alpha = z[0];
  f.beta = z[dim - 1];
  for (size_t i = 1; i + 1 < dim; ++i) {
    if (z[i] == 0) continue;
    if (z[i] != 1 || f.middle_index) return std::nullopt;
    f.middle_index = static_cast<int64_t>(i);
  }
  return f;
}

std::vector<int64_t> OptimizedForm::to_coeffs(int64_t dim) const {
  std::vector<int64_t> v(static_cast<size_t>(dim), 0);
  v[0] = alpha;
  v[static_cast<size_t>(dim) - 1] = beta;
  if (middle_index) v[static_cast<size_t>(*middle_index)] += 1;
  return v;
}

bool arithmetic_contains(const ArithmeticFamily& fam, int64_t m) {
  if (m < 0) return false;
  for (int64_t c1 = 0; checked_mul(c1, fam.a()) <= m; ++c1) {
    const int64_t rem = m - c1 * fam.a();
    if (rem % fam.d() != 0) continue;
    const int64_t c2 = rem / fam.d();
    if (checked_mul(fam.k(), c1) >= c2) return true;
  }
  return false;
}

Factorization optimize(const ArithmeticFamily& fam, const Factorization& z) {
  const int64_t K = fam.k();
  if (z.dim() != static_cast<size_t>(K + 1))
    fail(errc::invalid_factorization, "coefficient vector does not match the family dimension");
  // The length-preserving moves conserve the length l and the weighted index
  // sum t = sum(i * z_i); an optimized factorization with the same (l, t) is
  // unique, with beta = floor(t/K) and the interior 1 at t mod K.
  const int64_t l = z.length();
  int64_t t = 0;
  for (int64_t i = 0; i <= K; ++i) t = checked_add(t, checked_mul(i, z[static_cast<size_t>(i)]));
  const int64_t beta = t / K;
  const int64_t mid = t % K;
  OptimizedForm f;
  f.beta = beta;
  if (mid == 0) {
    f.alpha = l - beta;
  } else {
    f.alpha = l - beta - 1;
    f.middle_index = mid;
  }
  if (f.alpha < 0)
    fail(errc::invalid_factorization, "factorization admits no optimized form of its length");
  return Factorization(f.to_coeffs(K + 1));
}

bool is_non_minimal_length(const ArithmeticFamily& fam, const OptimizedForm& f) {
  const int64_t a = fam.a(), d = fam.d(), k = fam.k();
  if (f.middle_index) {
    return checked_mul(k, f.alpha + f.beta + 1 - d) >=
           checked_add(*f.middle_index, checked_add(checked_mul(f.beta, k), a));
  }
  return checked_mul(k, f.alpha + f.beta - d) >= checked_add(checked_mul(f.beta, k), a);
}

bool alpha_lower_bound_check(const ArithmeticFamily& fam, const OptimizedForm& f) {
  return f.alpha >= fam.catenary_closed() - 1;
}

Factorization move_B(const ArithmeticFamily& fam, const Factorization& z) {
  if (z.dim() != static_cast<size_t>(fam.k() + 1))
    fail(errc::invalid_factorization, "coefficient vector does not match the family dimension");
  const int64_t c = fam.catenary_closed();
  if (z[0] < c)
    fail(errc::precondition_failed,
         "move requires at least " + std::to_string(c) + " copies of the first generator");
  std::vector<int64_t> out(z.coeffs());
  out[0] -= c;
  const auto& z0 = fam.move_target();
  for (size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], z0[i]);
  return Factorization(std::move(out));
}

int64_t arithmetic_catenary_closed(const ArithmeticFamily& fam) { return fam.catenary_closed(); }

// ---------------------------------------------------------------------------
// GeneralizedArithmeticFamily
// ---------------------------------------------------------------------------

GeneralizedArithmeticFamily::GeneralizedArithmeticFamily(int64_t a, int64_t h, int64_t d, NumericalMonoid M)
    : a_(a), h_(h), d_(d), monoid_(std::move(M)) {}

GeneralizedArithmeticFamily GeneralizedArithmeticFamily::create(int64_t a, int64_t h, int64_t d) {
  if (h < 2) fail(errc::invalid_family, "generalized arithmetic family requires h >= 2");
  if (d < 1) fail(errc::invalid_family, "generalized arithmetic family requires d >= 1");
  if (a < 2) fail(errc::invalid_family, "generalized arithmetic family requires a >= 2");
  if (gcd64(a, d) != 1) fail(errc::invalid_family, "generalized arithmetic family requires gcd(a, d) = 1");
  const int64_t ah = checked_mul(a, h);
  std::vector<int64_t> gens{a, checked_add(ah, d), checked_add(ah, checked_mul(2, d))};
  return GeneralizedArithmeticFamily(a, h, d, minimal_family_monoid(gens, "generalized arithmetic family"));
}

int64_t gen_arith_equivalent_closed(const GeneralizedArithmeticFamily& fam) {
  const int64_t num = checked_add(checked_mul(fam.a(), fam.h()),
                                  checked_mul(2, fam.d())) - fam.a();
  return num / gcd64(fam.h() - 1, fam.d());
}

// ---------------------------------------------------------------------------
// GapFamily
// ---------------------------------------------------------------------------

GapFamily::GapFamily(int64_t n, int64_t a, int64_t x, NumericalMonoid M)
    : n_(n), a_(a), x_(x), monoid_(std::move(M)) {}

GapFamily GapFamily::create(int64_t n, int64_t a, int64_t x) {
  if (n < 1) fail(errc::invalid_family, "gap family requires n >= 1");
  if (a < 2) fail(errc::invalid_family, "gap family requires a >= 2");
  if (x < 2) fail(errc::invalid_family, "gap family requires x >= 2");
  const int64_t na = checked_mul(n, a);
  std::vector<int64_t> gens{na, checked_add(na, n),
                            checked_add(checked_mul(2, na), checked_add(checked_mul(n, x), 1))};
  return GapFamily(n, a, x, minimal_family_monoid(gens, "gap family"));
}

int64_t gap_adjacent_scan_bound(const NumericalMonoid& M) {
  return checked_mul(3, checked_add(M.frobenius(), M.generators().back()));
}

GapFamilyInvariants gap_family_invariants(const GapFamily& fam) {
  const NumericalMonoid& M = fam.monoid();
  const int64_t c_eq = checked_add(checked_mul(fam.n(), checked_add(fam.a(), fam.x())), 1);
  if (c_eq != dim3_equivalent_closed(M))
    fail(errc::invalid_family, "gap family closed form disagrees with the three-generator formula");
  GapFamilyInvariants out{
      c_eq,
      monoid_adjacent(M, gap_adjacent_scan_bound(M)),
      c_eq,
      monoid_catenary(M),
      false,
      false,
  };
  out.adj_below_eq = out.c_adj.value < out.c_eq;
  out.mon_exceeds_c = out.c_mon > out.c.value;
  return out;
}

// ---------------------------------------------------------------------------
// FrobeniusFamily
// ---------------------------------------------------------------------------

FrobeniusFamily::FrobeniusFamily(int64_t a, int64_t x, NumericalMonoid M)
    : a_(a), x_(x), monoid_(std::move(M)) {}

FrobeniusFamily FrobeniusFamily::create(int64_t a) {
  if (a < 4) fail(errc::invalid_family, "Frobenius family requires a >= 4");
  const int64_t third = checked_add(checked_mul(a, a), -a - 1);
  const NumericalMonoid two = NumericalMonoid::create({a, a + 1});
  if (two.frobenius() != third)
    fail(errc::invalid_family, "third generator is not the Frobenius number of <a, a+1>");
  std::vector<int64_t> gens{a, a + 1, third};
  // Gap family parameters: n = 1 and 2a + x + 1 = a^2 - a - 1.
  const int64_t x = third - 2 * a - 1;
  return FrobeniusFamily(a, x, minimal_family_monoid(gens, "Frobenius family"));
}

FrobeniusFamilyInvariants frobenius_family_invariants(const FrobeniusFamily& fam) {
  const NumericalMonoid& M = fam.monoid();
  const int64_t a = fam.a();
  FrobeniusFamilyInvariants out{
      betti_elements(M).elements,
      {a * a - 1, a * a, 2 * (a * a - a - 1)},
      monoid_catenary(M).value,
      2 * a - 3,
      0,
      a * a - 2 * a - 1,
      monoid_adjacent(M, gap_adjacent_scan_bound(M)),
      0,
      a * a - 4 * a + 2,
      a * a - 4 * a - 4,
  };
  const int64_t c_eq = dim3_equivalent_closed(M);
  out.c_mon = std::max(c_eq, out.c_adj.value);
  out.gap = out.c_mon - out.c;
  return out;
}

// ---------------------------------------------------------------------------
// Three-generator step maps
// ---------------------------------------------------------------------------

std::optional<Factorization> dim3_length_step(const NumericalMonoid& M, const Factorization& z,
                                              int64_t l, int64_t k) {
  if (M.dim() != 3) fail(errc::not_dimension3, "length step requires a three-generator basis");
  if (z.dim() != 3) fail(errc::dimension_mismatch, "factorization must have three coordinates");
  const auto& g = M.generators();
  const int64_t den = g[1] - g[0];
  const int64_t num = checked_add(checked_mul(l, g[0]), -checked_mul(k, g[2] - g[0]));
  if (num % den != 0) return std::nullopt;
  const int64_t q = num / den;
  const int64_t b1 = z[0] - q - k - l;
  const int64_t c1 = checked_add(z[1], q);
  const int64_t d1 = checked_add(z[2], k);
  if (b1 < 0 || c1 < 0 || d1 < 0) return std::nullopt;
  Factorization out(std::vector<int64_t>{b1, c1, d1});
  if (out.element_of(M) != z.element_of(M))
    fail(errc::invalid_argument, "internal error: length step changed the element");
  return out;
}

int64_t dim3_dissonance_bound(const NumericalMonoid& M) {
  return checked_add(checked_mul(M.generators()[1], dim3_equivalent_closed(M)), M.frobenius());
}

int64_t dim3_equivalent_classify(const NumericalMonoid& M, int64_t m) {
  if (M.dim() != 3) fail(errc::not_dimension3, "classification requires a three-generator basis");
  if (!M.contains(m)) fail(errc::not_in_monoid, std::to_string(m) + " is not in the monoid");
  const int64_t c_eq = dim3_equivalent_closed(M);
  const int64_t x = m - checked_mul(M.generators()[1], c_eq);
  return M.contains(x) ? c_eq : 0;
}

}  // namespace catena::families
