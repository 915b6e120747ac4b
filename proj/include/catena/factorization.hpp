#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "catena/monoid.hpp"

namespace catena {

// Exponent vector over a monoid's generator basis. Length is the coefficient
// sum and is kept consistent by construction.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<int64_t> coeffs);
  // Validates dot(coeffs, M.generators()) == element.
  static Factorization checked(const NumericalMonoid& M, int64_t element, std::vector<int64_t> coeffs);

  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  int64_t length() const { return length_; }
  size_t dim() const { return coeffs_.size(); }
  int64_t operator[](size_t i) const { return coeffs_[i]; }

  // Checked dot product with the basis.
  int64_t element_of(const NumericalMonoid& M) const;

  friend bool operator==(const Factorization& a, const Factorization& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const Factorization& a, const Factorization& b) { return a.coeffs_ < b.coeffs_; }

 private:
  std::vector<int64_t> coeffs_;
  int64_t length_ = 0;
};

int64_t vec_length(const std::vector<int64_t>& v);

// Componentwise minimum. The result factors a divisor element, not m itself,
// so it is returned as a raw vector.
std::vector<int64_t> gcd_fact(const Factorization& a, const Factorization& b);

// max(|a|, |b|) - |gcd(a, b)|.
int64_t distance(const Factorization& a, const Factorization& b);

struct LengthProfile {
  std::vector<int64_t> lengths;  // sorted ascending
  int64_t min_length = 0;
  int64_t max_length = 0;
  std::vector<int64_t> delta;  // distinct gaps between consecutive lengths, sorted
};

// All factorizations of one element, in canonical order: coefficient vectors
// sorted lexicographically descending.
class FactorizationSet {
 public:
  FactorizationSet() = default;
  FactorizationSet(int64_t element, std::vector<Factorization> all);

  int64_t element() const { return element_; }
  const std::vector<Factorization>& all() const { return all_; }
  bool empty() const { return all_.empty(); }
  size_t size() const { return all_.size(); }
  const Factorization& operator[](size_t i) const { return all_[i]; }
  // length -> indices into all(), ascending by length.
  const std::map<int64_t, std::vector<int32_t>>& by_length() const { return by_length_; }

 private:
  int64_t element_ = 0;
  std::vector<Factorization> all_;
  std::map<int64_t, std::vector<int32_t>> by_length_;
};

// Enumeration cap; MONOID_MAX_FACTORIZATIONS overrides the default of 10^6.
int64_t default_factorization_cap();

// Every solution of dot(z, generators) = m, canonically ordered. Empty iff
// m is not in the monoid. Throws ExplosionGuard past the cap.
FactorizationSet enumerate(const NumericalMonoid& M, int64_t m, std::optional<int64_t> cap = {});

// Lengths, extremes and delta set of a non-empty factorization set.
LengthProfile length_profile(const FactorizationSet& fs);

// Same profile computed by dynamic programming over (value, length) pairs,
// without enumerating factorizations. Throws EmptySet if m is not in M.
LengthProfile length_profile_of(const NumericalMonoid& M, int64_t m);

}  // namespace catena
