#include "catena/monoid.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace catena {

namespace {

// Apery computation allocates one slot per residue class mod n_1.
constexpr int64_t kAperyGuard = int64_t(1) << 24;

std::vector<int64_t> sorted_unique(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool representable(const std::vector<int64_t>& gens, int64_t m) {
  if (m < 0) return false;
  if (m == 0) return true;
  std::vector<char> in(static_cast<size_t>(m) + 1, 0);
  in[0] = 1;
  for (int64_t v = 1; v <= m; ++v) {
    for (int64_t g : gens) {
      if (g <= v && in[static_cast<size_t>(v - g)]) {
        in[static_cast<size_t>(v)] = 1;
        break;
      }
    }
  }
  return in[static_cast<size_t>(m)] != 0;
}

std::vector<int64_t> minimal_generating_set(std::vector<int64_t> gens) {
  gens = sorted_unique(std::move(gens));
  if (!gens.empty() && gens.front() == 1) return {1};
  std::vector<int64_t> kept;
  for (int64_t g : gens) {
    // g is redundant iff representable over the other generators; only
    // smaller ones can contribute, and redundant smaller ones are already
    // spanned by the kept set.
    if (!representable(kept, g)) kept.push_back(g);
  }
  return kept;
}

NumericalMonoid NumericalMonoid::build(const std::vector<int64_t>& raw, bool reduce) {
  if (raw.empty()) fail(errc::empty_generators, "generator list is empty");
  for (int64_t g : raw) {
    if (g <= 0) fail(errc::zero_generator, "generators must be >= 1 (got " + std::to_string(g) + ")");
  }
  int64_t g = 0;
  for (int64_t v : raw) g = gcd64(g, v);
  if (g != 1)
    fail(errc::non_coprime, "gcd of generators is " + std::to_string(g) + "; the monoid would not be cofinite");

  NumericalMonoid M;
  M.input_ = raw;
  std::vector<int64_t> basis = sorted_unique(raw);
  M.minimal_ = minimal_generating_set(basis);
  M.basis_ = reduce ? M.minimal_ : std::move(basis);
  M.compute_apery();
  return M;
}

NumericalMonoid NumericalMonoid::create(const std::vector<int64_t>& raw) { return build(raw, true); }

NumericalMonoid NumericalMonoid::with_basis(const std::vector<int64_t>& raw) { return build(raw, false); }

void NumericalMonoid::compute_apery() {
  const int64_t n1 = basis_.front();
  if (n1 > kAperyGuard)
    fail_guard(errc::explosion_guard,
               "multiplicity " + std::to_string(n1) + " exceeds the Apery table guard");
  apery_.assign(static_cast<size_t>(n1), std::numeric_limits<int64_t>::max());
  apery_[0] = 0;
  if (n1 == 1) {
    frobenius_ = -1;
    return;
  }
  // Shortest path over residues mod n_1 with one edge per non-multiplicity
  // generator; dist[r] is the least monoid element congruent to r.
  using Node = std::pair<int64_t, int64_t>;  // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [v, r] = pq.top();
    pq.pop();
    if (v != apery_[static_cast<size_t>(r)]) continue;
    for (size_t i = 1; i < basis_.size(); ++i) {
      int64_t w = checked_add(v, basis_[i]);
      int64_t s = w % n1;
      if (w < apery_[static_cast<size_t>(s)]) {
        apery_[static_cast<size_t>(s)] = w;
        pq.emplace(w, s);
      }
    }
  }
  frobenius_ = *std::max_element(apery_.begin(), apery_.end()) - n1;
}

bool NumericalMonoid::contains(int64_t m) const {
  if (m < 0) return false;
  const int64_t n1 = basis_.front();
  return m >= apery_[static_cast<size_t>(m % n1)];
}

bool NumericalMonoid::contains_dp(int64_t m) const {
  if (m < 0) return false;
  std::lock_guard<std::mutex> lock(table_->mu);
  auto& in = table_->in;
  if (static_cast<size_t>(m) >= in.size()) {
    size_t old = in.size();
    size_t want = static_cast<size_t>(m) + 1;
    in.resize(std::max(want, old * 2), 0);
    if (old == 0) {
      in[0] = 1;
      old = 1;
    }
    for (size_t v = old; v < in.size(); ++v) {
      for (int64_t g : basis_) {
        if (static_cast<size_t>(g) <= v && in[v - static_cast<size_t>(g)]) {
          in[v] = 1;
          break;
        }
      }
    }
  }
  return in[static_cast<size_t>(m)] != 0;
}

}  // namespace catena
