#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "catena/errors.hpp"

namespace catena {

// A numerical monoid: a cofinite additive submonoid of the naturals,
// presented by a strictly increasing generator basis with gcd 1.
//
// `create` reduces its input to the unique minimal generating set.
// `with_basis` keeps the given tuple as the factorization basis; the
// coefficient vectors used throughout the library are always relative to
// generators(). The minimal set is available either way for reporting.
//
// Instances are immutable after construction and safe to share across
// threads; the lazily grown membership table is internally synchronized.
class NumericalMonoid {
 public:
  static NumericalMonoid create(const std::vector<int64_t>& raw);
  static NumericalMonoid with_basis(const std::vector<int64_t>& raw);

  // Factorization basis (sorted ascending, distinct).
  const std::vector<int64_t>& generators() const { return basis_; }
  // Unique minimal generating set of the underlying monoid.
  const std::vector<int64_t>& minimal_generators() const { return minimal_; }
  // Generators exactly as passed in, before sorting or reduction.
  const std::vector<int64_t>& input_generators() const { return input_; }
  bool basis_is_minimal() const { return basis_ == minimal_; }

  // Dimension of coefficient vectors (size of the basis).
  int64_t dim() const { return static_cast<int64_t>(basis_.size()); }
  // Size of the minimal generating set.
  int64_t embedding_dim() const { return static_cast<int64_t>(minimal_.size()); }

  int64_t multiplicity() const { return basis_.front(); }
  // Largest integer not in the monoid; -1 when the monoid is all of N.
  int64_t frobenius() const { return frobenius_; }
  // For each residue r mod n_1, the least element congruent to r.
  const std::vector<int64_t>& apery() const { return apery_; }

  // Membership via the Apery set: m in M iff m >= apery[m mod n_1].
  bool contains(int64_t m) const;
  // Membership via the cached dynamic-programming table. Must agree with
  // contains() everywhere; kept as an independent route for dense scans.
  bool contains_dp(int64_t m) const;

  friend bool operator==(const NumericalMonoid& a, const NumericalMonoid& b) {
    return a.basis_ == b.basis_;
  }

 private:
  NumericalMonoid() = default;
  static NumericalMonoid build(const std::vector<int64_t>& raw, bool reduce);
  void compute_apery();

  std::vector<int64_t> input_;
  std::vector<int64_t> basis_;
  std::vector<int64_t> minimal_;
  std::vector<int64_t> apery_;
  int64_t frobenius_ = -1;

  struct MembershipTable {
    std::mutex mu;
    std::vector<char> in;  // in[v] != 0 iff v in M
  };
  std::shared_ptr<MembershipTable> table_ = std::make_shared<MembershipTable>();
};

// True iff m is a non-negative integer combination of gens (no validation of
// gens beyond positivity; used for reduction and Betti coefficient scans).
bool representable(const std::vector<int64_t>& gens, int64_t m);

// Reduce a positive integer list to the minimal generating set of the monoid
// it generates (sorted ascending, duplicates removed).
std::vector<int64_t> minimal_generating_set(std::vector<int64_t> gens);

}  // namespace catena
