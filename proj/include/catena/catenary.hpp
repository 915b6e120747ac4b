#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "catena/factorization.hpp"
#include "catena/monoid.hpp"

namespace catena {

// An explicit factorization chain certifying an N-chain.
struct ChainWitness {
  std::vector<Factorization> steps;
  int64_t bottleneck = 0;      // max consecutive distance, attained
  bool monotone_flag = false;  // lengths weakly monotone along the chain
  bool equal_length_flag = false;
};

// Computes bottleneck and flags from the steps; at least one step required.
ChainWitness make_chain_witness(std::vector<Factorization> steps);

enum class Exactness { exact, observed_lower_bound };
enum class Method { closed_form, betti_scan, bounded_scan, max_formula, direct_chain };
const char* to_string(Exactness e);
const char* to_string(Method m);

// A set-level invariant value with provenance. Exact values may only come
// from closed forms, Betti scans, exact max-formulas or direct chains.
struct InvariantReport {
  InvariantReport(int64_t value, Exactness exactness, Method method,
                  std::optional<int64_t> scan_bound = {}, bool heuristic_bound = false);
  int64_t value;
  Exactness exactness;
  Method method;
  std::optional<int64_t> scan_bound;
  bool heuristic_bound;  // Betti bound not established for basis dimension > 3
};

// ---------------------------------------------------------------------------
// Element-level catenary degrees (all exact).
// ---------------------------------------------------------------------------

// Least N such that the graph on Z(m) with edges {d <= N} is connected;
// 0 when |Z(m)| <= 1. Computed as the maximum edge of a minimum bottleneck
// spanning structure; large sets switch to an equivalent flood-fill search.
int64_t catenary(const NumericalMonoid& M, int64_t m);

// Max over length classes of the bottleneck connectivity value within the
// class (edges restricted to same-length pairs); singleton classes give 0.
int64_t equivalent(const NumericalMonoid& M, int64_t m);

// Max over consecutive length pairs (a, b) of min{d(z, z') : |z|=a, |z'|=b}.
int64_t adjacent(const NumericalMonoid& M, int64_t m);

// Definition-level monotone catenary degree: least N such that in the
// directed graph with edge u -> v iff |u| <= |v| and d(u, v) <= N, every
// ordered pair (z, z') with |z| <= |z'| is connected. Kept deliberately
// independent of monotone() so the two can be cross-checked.
int64_t monotone_direct(const NumericalMonoid& M, int64_t m);

// max(equivalent, adjacent).
int64_t monotone(const NumericalMonoid& M, int64_t m);

// ---------------------------------------------------------------------------
// Betti elements.
// ---------------------------------------------------------------------------

// True iff the support graph on Z(m) (edges between factorizations with
// overlapping support) is disconnected.
bool is_betti(const NumericalMonoid& M, int64_t m);

struct BettiScan {
  std::vector<int64_t> elements;       // ascending
  int64_t bound = 0;                   // scan bound max_i c_i * n_i
  std::vector<int64_t> coefficients;   // c_i = min{c >= 1 : c*n_i in <other generators>}
  bool heuristic = false;              // bound not established for basis dimension > 3
};

// All Betti elements up to the coefficient bound.
BettiScan betti_elements(const NumericalMonoid& M);

// ---------------------------------------------------------------------------
// Set-level invariants.
// ---------------------------------------------------------------------------

// Default element scan bound for set-level observed invariants: F(M) + 2*n_k*k.
int64_t default_scan_bound(const NumericalMonoid& M);

// Exact via Betti scan: the catenary degree of the monoid is attained at a
// Betti element.
InvariantReport monoid_catenary(const NumericalMonoid& M);

// Exact closed form (n3 - n1)/gcd(n3 - n1, n2 - n1) when the basis has three
// generators; bounded scan otherwise.
InvariantReport monoid_equivalent(const NumericalMonoid& M, std::optional<int64_t> scan_bound = {});

// Bounded scan (observed lower bound).
InvariantReport monoid_adjacent(const NumericalMonoid& M, std::optional<int64_t> scan_bound = {});

// max(monoid_equivalent, monoid_adjacent); exactness is the weakest input's.
InvariantReport monoid_monotone(const NumericalMonoid& M, std::optional<int64_t> scan_bound = {});

// Closed form for three-generator bases: (n3 - n1)/gcd(n3 - n1, n2 - n1).
int64_t dim3_equivalent_closed(const NumericalMonoid& M);

// ---------------------------------------------------------------------------
// Witnesses.
// ---------------------------------------------------------------------------

enum class ChainKind { regular, equal_length, monotone };

// An N-chain of the requested kind between two factorizations of m, or
// nullopt when none exists at this level.
std::optional<ChainWitness> chain_between(const NumericalMonoid& M, int64_t m, const Factorization& from,
                                          const Factorization& to, ChainKind kind, int64_t level);

// Two factorizations of m in different components of the level-N graph of
// the given kind (for equal_length: same length, not same-length-connected).
// nullopt when the graph is connected at this level.
std::optional<std::pair<Factorization, Factorization>> disconnection_witness(const NumericalMonoid& M,
                                                                             int64_t m, int64_t level,
                                                                             ChainKind kind);

struct ElementInvariants {
  int64_t element = 0;
  LengthProfile profile;
  uint64_t factorization_count = 0;
  int64_t catenary = 0;
  int64_t equivalent = 0;
  int64_t adjacent = 0;
  int64_t monotone = 0;
  std::optional<ChainWitness> catenary_witness;
  std::optional<ChainWitness> equivalent_witness;
  std::optional<ChainWitness> adjacent_witness;
  std::optional<ChainWitness> monotone_witness;
};

ElementInvariants element_invariants(const NumericalMonoid& M, int64_t m, bool with_witnesses = false);

struct SetInvariants {
  InvariantReport catenary;
  InvariantReport equivalent;
  InvariantReport adjacent;
  InvariantReport monotone;
  BettiScan betti;
  int64_t frobenius = 0;
};

SetInvariants set_invariants(const NumericalMonoid& M, std::optional<int64_t> scan_bound = {});

// ---------------------------------------------------------------------------
// Scanner: shared exact engine for dense element scans.
//
// Holds per-monoid (value, length) feasibility bit-tables up to a value
// bound, factorization counts, and cached trade-move sets, so sweeps over
// many elements avoid re-enumerating Z(m). All methods are exact; large
// searches are flood fills over packed coefficient vectors.
// ---------------------------------------------------------------------------
class Scanner {
 public:
  Scanner(const NumericalMonoid& M, int64_t value_bound, bool with_counts = true);

  const NumericalMonoid& monoid() const { return monoid_; }
  int64_t value_bound() const { return bound_; }
  int64_t max_length() const { return max_len_; }

  // Is `value` expressible with exactly `len` coins?
  bool has(int64_t value, int64_t len) const;
  std::vector<int64_t> lengths_of(int64_t m) const;
  LengthProfile profile(int64_t m) const;

  uint64_t factorization_count(int64_t m) const;           // saturating
  uint64_t class_count(int64_t m, int64_t len) const;      // saturating

  // min{d(z, z') : |z| = len_lo, |z'| = len_hi} over Z(m); requires both
  // lengths realized and len_lo < len_hi.
  int64_t min_cross(int64_t m, int64_t len_lo, int64_t len_hi) const;
  int64_t adjacent_degree(int64_t m) const;

  // Canonical member of a non-empty length class.
  Factorization member_of_class(int64_t m, int64_t len) const;

  // Is the length class connected under same-length edges of distance <= level?
  bool class_connected_at(int64_t m, int64_t len, int64_t level) const;
  // Is Z(m) connected under edges of distance <= level? Flood fill.
  bool connected_flood(int64_t m, int64_t level) const;
  // Same question via length-class condensation; valid only when every
  // multi-member class is internally connected at `level`.
  bool connected_via_classes(int64_t m, int64_t level) const;
  // Does the level admit any trade between different lengths?
  bool cross_moves_exist(int64_t level) const;

  int64_t equivalent_degree(int64_t m) const;
  int64_t catenary_degree(int64_t m) const;

 private:
  struct BitTable {
    size_t words = 0;
    std::vector<std::vector<uint64_t>> rows;  // rows[len] over values [0, bound]
    bool get(int64_t value, int64_t len) const {
      if (len < 0 || static_cast<size_t>(len) >= rows.size()) return false;
      return (rows[static_cast<size_t>(len)][static_cast<size_t>(value) >> 6] >>
              (static_cast<size_t>(value) & 63)) & 1;
    }
  };

  struct TradeMove {
    std::vector<int32_t> take, put;
    uint32_t take_mask = 0;
    uint64_t key_delta = 0;  // pack(put) - pack(take), modular
    int32_t take_len = 0, put_len = 0;
  };
  struct MoveSet {
    std::vector<TradeMove> moves;
    bool has_cross = false;
  };

  uint64_t pack(const std::vector<int64_t>& coeffs) const;
  std::shared_ptr<const MoveSet> moves_at(int64_t level, bool same_length_only) const;
  uint64_t flood(int64_t m, const Factorization& start, const MoveSet& ms, uint64_t stop_at) const;

  NumericalMonoid monoid_;
  int64_t bound_ = 0;
  int64_t max_len_ = 0;
  int coord_bits_ = 0;
  std::vector<BitTable> prefix_;              // prefix_[j]: first j+1 generators
  std::vector<std::vector<uint64_t>> counts_; // counts_[len][value], saturating
  bool with_counts_ = false;

  mutable std::mutex moves_mu_;
  mutable std::map<std::pair<int64_t, bool>, std::shared_ptr<const MoveSet>> moves_cache_;
};

}  // namespace catena
