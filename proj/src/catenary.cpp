#include "catena/catenary.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace catena {

namespace {

// Pairwise algorithms enumerate Z(m) and touch all pairs; above these sizes
// the Scanner switches to flood-fill searches with identical results.
constexpr int64_t kPairwiseTotalCap = 1500;
constexpr uint64_t kPairSquaredCap = 4'000'000;
constexpr int64_t kMonotoneCap = 4000;
constexpr int64_t kWitnessCap = 5000;
constexpr int64_t kBettiCoefficientGuard = 200'000;
constexpr size_t kMoveEntryGuard = 200'000;
constexpr size_t kMoveCountGuard = 1'000'000;

inline uint64_t sat_add(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  return r < a ? std::numeric_limits<uint64_t>::max() : r;
}

struct UnionFind {
  explicit UnionFind(int32_t n) : parent(n), rnk(n, 0), comps(n) {
    for (int32_t i = 0; i < n; ++i) parent[i] = i;
  }
  int32_t find(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rnk[a] < rnk[b]) std::swap(a, b);
    parent[b] = a;
    if (rnk[a] == rnk[b]) ++rnk[a];
    --comps;
    return true;
  }
  std::vector<int32_t> parent, rnk;
  int32_t comps;
};

struct BottleneckResult {
  int64_t value = 0;
  int32_t a = -1, b = -1;  // endpoints of the final merging edge
};

struct Edge {
  uint32_t d;
  int32_t i, j;
};

// Maximum edge of a minimum bottleneck spanning structure over the given
// nodes (sorted-edge union-find), with the pair that forces it.
BottleneckResult pairwise_bottleneck(const FactorizationSet& fs, const std::vector<int32_t>& nodes) {
  BottleneckResult r;
  const size_t n = nodes.size();
  if (n <= 1) return r;
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      edges.push_back({static_cast<uint32_t>(distance(fs[nodes[i]], fs[nodes[j]])),
                       static_cast<int32_t>(i), static_cast<int32_t>(j)});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.d < b.d; });
  UnionFind uf(static_cast<int32_t>(n));
  for (const Edge& e : edges) {
    if (uf.unite(e.i, e.j)) {
      r.value = e.d;
      r.a = nodes[e.i];
      r.b = nodes[e.j];
      if (uf.comps == 1) break;
    }
  }
  return r;
}

std::vector<int32_t> all_indices(const FactorizationSet& fs) {
  std::vector<int32_t> idx(fs.size());
  for (size_t i = 0; i < fs.size(); ++i) idx[i] = static_cast<int32_t>(i);
  return idx;
}

void require_member(const NumericalMonoid& M, int64_t m) {
  if (!M.contains(m))
    fail(errc::not_in_monoid, std::to_string(m) + " is not in the monoid");
}

// Feasibility of level N for the monotone reachability condition, with a
// violating ordered pair when infeasible. Classes listed ascending by length.
struct MonotoneCheck {
  bool feasible = true;
  int32_t from = -1, to = -1;
};

MonotoneCheck monotone_feasible(const FactorizationSet& fs,
                                const std::vector<std::pair<int64_t, std::vector<int32_t>>>& classes,
                                const std::vector<uint32_t>& dist, int64_t level) {
  const size_t n = fs.size();
  auto d_at = [&](int32_t i, int32_t j) { return dist[static_cast<size_t>(i) * n + j]; };
  MonotoneCheck res;
  // Equal-length pairs must be connected inside their class: directed paths
  // between equal-length endpoints cannot leave the class, every edge going
  // weakly up in length.
  UnionFind uf(static_cast<int32_t>(n));
  for (const auto& [len, idx] : classes) {
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b)
        if (d_at(idx[a], idx[b]) <= level) uf.unite(idx[a], idx[b]);
    for (size_t a = 1; a < idx.size(); ++a) {
      if (uf.find(idx[a]) != uf.find(idx[0])) {
        res.feasible = false;
        res.from = idx[0];
        res.to = idx[a];
        return res;
      }
    }
  }
  // Each class is now one strongly connected cluster; cross reachability is
  // transitive closure over the class condensation.
  const size_t L = classes.size();
  const size_t words = (L + 63) / 64;
  std::vector<std::vector<uint64_t>> reach(L, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<char>> edge(L, std::vector<char>(L, 0));
  for (size_t ci = 0; ci < L; ++ci)
    for (size_t cj = ci + 1; cj < L; ++cj) {
      bool found = false;
      for (int32_t a : classes[ci].second) {
        for (int32_t b : classes[cj].second)
          if (d_at(a, b) <= level) {
            found = true;
            break;
          }
        if (found) break;
      }
      edge[ci][cj] = found;
    }
  for (size_t ci = L; ci-- > 0;) {
    reach[ci][ci >> 6] |= uint64_t(1) << (ci & 63);
    for (size_t cj = ci + 1; cj < L; ++cj)
      if (edge[ci][cj])
        for (size_t w = 0; w < words; ++w) reach[ci][w] |= reach[cj][w];
  }
  for (size_t ci = 0; ci < L; ++ci)
    for (size_t cj = ci + 1; cj < L; ++cj)
      if (!((reach[ci][cj >> 6] >> (cj & 63)) & 1)) {
        res.feasible = false;
        res.from = classes[ci].second.front();
        res.to = classes[cj].second.front();
        return res;
      }
  return res;
}

}  // namespace

ChainWitness make_chain_witness(std::vector<Factorization> steps) {
  if (steps.empty()) fail(errc::invalid_argument, "chain witness requires at least one factorization");
  ChainWitness w;
  w.bottleneck = 0;
  bool up = true, down = true, eq = true;
  for (size_t i = 1; i < steps.size(); ++i) {
    w.bottleneck = std::max(w.bottleneck, distance(steps[i - 1], steps[i]));
    if (steps[i - 1].length() > steps[i].length()) up = false;
    if (steps[i - 1].length() < steps[i].length()) down = false;
    if (steps[i - 1].length() != steps[i].length()) eq = false;
  }
  w.monotone_flag = up || down;
  w.equal_length_flag = eq;
  w.steps = std::move(steps);
  return w;
}

const char* to_string(Exactness e) {
  return e == Exactness::exact ? "exact" : "observed-lower-bound";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed-form";
    case Method::betti_scan: return "betti-scan";
    case Method::bounded_scan: return "bounded-scan";
    case Method::max_formula: return "max-formula";
    case Method::direct_chain: return "direct-chain";
  }
  return "?";
}

InvariantReport::InvariantReport(int64_t value, Exactness exactness, Method method,
                                 std::optional<int64_t> scan_bound, bool heuristic_bound)
    : value(value), exactness(exactness), method(method), scan_bound(scan_bound),
      heuristic_bound(heuristic_bound) {
  if (exactness == Exactness::exact && method == Method::bounded_scan)
    fail(errc::invalid_argument, "a bounded scan cannot be reported as exact");
}

// ---------------------------------------------------------------------------
// Scanner
// ---------------------------------------------------------------------------

namespace {

// dst |= src << shift, truncated at dst's width.
void or_shifted(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src, int64_t shift) {
  const size_t ws = static_cast<size_t>(shift) >> 6;
  const size_t bs = static_cast<size_t>(shift) & 63;
  if (ws >= dst.size()) return;
  for (size_t w = dst.size(); w-- > ws;) {
    uint64_t v = src[w - ws] << bs;
    if (bs && w > ws) v |= src[w - ws - 1] >> (64 - bs);
    dst[w] |= v;
  }
}

}  // namespace

Scanner::Scanner(const NumericalMonoid& M, int64_t value_bound, bool with_counts)
    : monoid_(M), bound_(std::max<int64_t>(value_bound, 0)), with_counts_(with_counts) {
  const auto& gens = monoid_.generators();
  const size_t k = gens.size();
  max_len_ = bound_ / gens.front();
  coord_bits_ = std::max(1, static_cast<int>(std::bit_width(static_cast<uint64_t>(max_len_))));
  const size_t words = static_cast<size_t>(bound_) / 64 + 1;

  prefix_.resize(k);
  for (size_t j = 0; j < k; ++j) {
    auto& t = prefix_[j];
    t.words = words;
    t.rows.assign(static_cast<size_t>(max_len_) + 1, std::vector<uint64_t>(words, 0));
    t.rows[0][0] = 1;
    for (int64_t s = 1; s <= max_len_; ++s) {
      if (j > 0) t.rows[s] = prefix_[j - 1].rows[s];
      if (gens[j] <= bound_) or_shifted(t.rows[s], t.rows[s - 1], gens[j]);
    }
  }

  if (with_counts_) {
    counts_.assign(static_cast<size_t>(max_len_) + 1,
                   std::vector<uint64_t>(static_cast<size_t>(bound_) + 1, 0));
    counts_[0][0] = 1;
    for (int64_t g : gens) {
      if (g > bound_) continue;
      for (int64_t s = 1; s <= max_len_; ++s) {
        auto& row = counts_[static_cast<size_t>(s)];
        const auto& prev = counts_[static_cast<size_t>(s - 1)];
        for (int64_t v = g; v <= bound_; ++v)
          row[static_cast<size_t>(v)] = sat_add(row[static_cast<size_t>(v)], prev[static_cast<size_t>(v - g)]);
      }
    }
  }
}

bool Scanner::has(int64_t value, int64_t len) const {
  if (value < 0 || value > bound_ || len < 0 || len > max_len_) return false;
  return prefix_.back().get(value, len);
}

std::vector<int64_t> Scanner::lengths_of(int64_t m) const {
  std::vector<int64_t> out;
  for (int64_t s = 0; s <= max_len_; ++s)
    if (has(m, s)) out.push_back(s);
  return out;
}

LengthProfile Scanner::profile(int64_t m) const {
  LengthProfile p;
  p.lengths = lengths_of(m);
  if (p.lengths.empty()) fail(errc::empty_set, std::to_string(m) + " is not in the monoid");
  p.min_length = p.lengths.front();
  p.max_length = p.lengths.back();
  for (size_t i = 1; i < p.lengths.size(); ++i) p.delta.push_back(p.lengths[i] - p.lengths[i - 1]);
  std::sort(p.delta.begin(), p.delta.end());
  p.delta.erase(std::unique(p.delta.begin(), p.delta.end()), p.delta.end());
  return p;
}

uint64_t Scanner::factorization_count(int64_t m) const {
  if (!with_counts_) fail(errc::invalid_argument, "scanner was built without counting tables");
  if (m < 0 || m > bound_) return 0;
  uint64_t total = 0;
  for (int64_t s = 0; s <= max_len_; ++s) total = sat_add(total, counts_[static_cast<size_t>(s)][static_cast<size_t>(m)]);
  return total;
}

uint64_t Scanner::class_count(int64_t m, int64_t len) const {
  if (!with_counts_) fail(errc::invalid_argument, "scanner was built without counting tables");
  if (m < 0 || m > bound_ || len < 0 || len > max_len_) return 0;
  return counts_[static_cast<size_t>(len)][static_cast<size_t>(m)];
}

int64_t Scanner::min_cross(int64_t m, int64_t len_lo, int64_t len_hi) const {
  // d(z, z') = len_hi - |gcd|; write z = w + u, z' = w + v with disjoint u, v.
  // Then dot u = dot v, |u| = d, |v| = d - delta and w factors m - dot u with
  // |w| = len_hi - d. Minimize d by scanning the shared-value table.
  const int64_t delta = len_hi - len_lo;
  const auto& rows = prefix_.back().rows;
  const size_t last_word = static_cast<size_t>(m) >> 6;
  const uint64_t last_mask = (static_cast<size_t>(m) & 63) == 63
                                 ? ~uint64_t(0)
                                 : ((uint64_t(1) << ((static_cast<size_t>(m) & 63) + 1)) - 1);
  for (int64_t s = delta; s <= len_hi; ++s) {
    const int64_t wlen = len_hi - s;
    const auto& ru = rows[static_cast<size_t>(s)];
    const auto& rv = rows[static_cast<size_t>(s - delta)];
    const auto& rw = rows[static_cast<size_t>(wlen)];
    for (size_t w = 0; w <= last_word; ++w) {
      uint64_t bits = ru[w] & rv[w];
      if (w == last_word) bits &= last_mask;
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        const int64_t e = static_cast<int64_t>(w * 64 + static_cast<size_t>(b));
        const int64_t rest = m - e;
        if ((rw[static_cast<size_t>(rest) >> 6] >> (static_cast<size_t>(rest) & 63)) & 1) return s;
      }
    }
  }
  fail(errc::invalid_argument, "min_cross called with unrealized lengths");
}

int64_t Scanner::adjacent_degree(int64_t m) const {
  const auto lens = lengths_of(m);
  int64_t best = 0;
  for (size_t i = 1; i < lens.size(); ++i)
    best = std::max(best, min_cross(m, lens[i - 1], lens[i]));
  return best;
}

Factorization Scanner::member_of_class(int64_t m, int64_t len) const {
  const auto& gens = monoid_.generators();
  const size_t k = gens.size();
  std::vector<int64_t> coeffs(k, 0);
  int64_t rem = m, s = len;
  for (size_t pos = k; pos-- > 1;) {
    const int64_t g = gens[pos];
    bool found = false;
    for (int64_t c = std::min(rem / g, s); c >= 0; --c) {
      if (prefix_[pos - 1].get(rem - c * g, s - c)) {
        coeffs[pos] = c;
        rem -= c * g;
        s -= c;
        found = true;
        break;
      }
    }
    if (!found) fail(errc::empty_set, "no factorization of " + std::to_string(m) + " with length " + std::to_string(len));
  }
  if (rem != s * gens[0])
    fail(errc::empty_set, "no factorization of " + std::to_string(m) + " with length " + std::to_string(len));
  coeffs[0] = s;
  return Factorization(std::move(coeffs));
}

uint64_t Scanner::pack(const std::vector<int64_t>& coeffs) const {
  uint64_t key = 0;
  for (size_t i = 0; i < coeffs.size(); ++i)
    key |= static_cast<uint64_t>(coeffs[i]) << (i * static_cast<size_t>(coord_bits_));
  return key;
}

std::shared_ptr<const Scanner::MoveSet> Scanner::moves_at(int64_t level, bool same_length_only) const {
  {
    std::lock_guard<std::mutex> lock(moves_mu_);
    auto it = moves_cache_.find({level, same_length_only});
    if (it != moves_cache_.end()) return it->second;
  }
  const auto& gens = monoid_.generators();
  const size_t k = gens.size();
  if (k * static_cast<size_t>(coord_bits_) > 64)
    fail_guard(errc::explosion_guard, "coefficient vectors too wide for packed flood search");

  struct Entry {
    std::vector<int32_t> u;
    int64_t value = 0;
    int32_t len = 0;
    uint32_t mask = 0;
  };
  std::vector<Entry> entries;
  std::vector<int32_t> u(k, 0);
  auto emit = [&] {
    Entry e;
    e.u = u;
    for (size_t i = 0; i < k; ++i) {
      e.value += static_cast<int64_t>(u[i]) * gens[i];
      e.len += u[i];
      if (u[i] > 0) e.mask |= uint32_t(1) << i;
    }
    if (e.len == 0 || e.len > max_len_ || e.value > bound_) return;
    if (entries.size() >= kMoveEntryGuard)
      fail_guard(errc::explosion_guard, "trade move generation exceeds the entry guard");
    entries.push_back(std::move(e));
  };
  auto rec = [&](auto&& self, size_t pos, int64_t remaining) -> void {
    if (pos == k) {
      emit();
      return;
    }
    for (int64_t c = 0; c <= remaining; ++c) {
      u[pos] = static_cast<int32_t>(c);
      self(self, pos + 1, remaining - c);
    }
    u[pos] = 0;
  };
  rec(rec, 0, level);

  std::unordered_map<int64_t, std::vector<size_t>> buckets;
  for (size_t i = 0; i < entries.size(); ++i) buckets[entries[i].value].push_back(i);

  auto pack32 = [&](const std::vector<int32_t>& v) {
    uint64_t key = 0;
    for (size_t i = 0; i < v.size(); ++i)
      key |= static_cast<uint64_t>(static_cast<uint64_t>(v[i])) << (i * static_cast<size_t>(coord_bits_));
    return key;
  };

  auto ms = std::make_shared<MoveSet>();
  for (const auto& [value, idx] : buckets) {
    for (size_t p : idx)
      for (size_t q : idx) {
        if (p == q) continue;
        const Entry& ep = entries[p];
        const Entry& eq = entries[q];
        if (same_length_only && ep.len != eq.len) continue;
        if (ep.mask & eq.mask) continue;  // disjoint support is canonical
        if (ms->moves.size() >= kMoveCountGuard)
          fail_guard(errc::explosion_guard, "trade move set exceeds the move guard");
        TradeMove mv;
        mv.take = ep.u;
        mv.put = eq.u;
        mv.take_mask = ep.mask;
        mv.take_len = ep.len;
        mv.put_len = eq.len;
        mv.key_delta = pack32(eq.u) - pack32(ep.u);
        if (ep.len != eq.len) ms->has_cross = true;
        ms->moves.push_back(std::move(mv));
      }
  }
  std::lock_guard<std::mutex> lock(moves_mu_);
  auto [it, inserted] = moves_cache_.emplace(std::make_pair(level, same_length_only),
                                             std::shared_ptr<const MoveSet>(ms));
  return it->second;
}

uint64_t Scanner::flood(int64_t m, const Factorization& start, const MoveSet& ms, uint64_t stop_at) const {
  (void)m;
  const size_t k = monoid_.generators().size();
  if (k * static_cast<size_t>(coord_bits_) > 64)
    fail_guard(errc::explosion_guard, "coefficient vectors too wide for packed flood search");
  if (stop_at > static_cast<uint64_t>(default_factorization_cap()))
    fail_guard(errc::explosion_guard, "flood search exceeds the factorization cap");

  const uint64_t field_mask = (coord_bits_ == 64) ? ~uint64_t(0) : ((uint64_t(1) << coord_bits_) - 1);
  std::unordered_set<uint64_t> visited;
  visited.reserve(static_cast<size_t>(std::min<uint64_t>(stop_at * 2, 8'000'000)));
  std::vector<uint64_t> frontier;
  const uint64_t start_key = pack(start.coeffs());
  visited.insert(start_key);
  frontier.push_back(start_key);
  uint64_t reached = 1;
  std::vector<int64_t> c(k, 0);

  while (!frontier.empty() && reached < stop_at) {
    const uint64_t key = frontier.back();
    frontier.pop_back();
    uint32_t mask = 0;
    for (size_t i = 0; i < k; ++i) {
      c[i] = static_cast<int64_t>((key >> (i * static_cast<size_t>(coord_bits_))) & field_mask);
      if (c[i] > 0) mask |= uint32_t(1) << i;
    }
    for (const TradeMove& mv : ms.moves) {
      if (mv.take_mask & ~mask) continue;
      bool ok = true;
      for (size_t i = 0; i < k; ++i) {
        if (c[i] < mv.take[i]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const uint64_t nk = key + mv.key_delta;
      if (visited.insert(nk).second) {
        frontier.push_back(nk);
        if (++reached >= stop_at) break;
      }
    }
  }
  return reached;
}

bool Scanner::class_connected_at(int64_t m, int64_t len, int64_t level) const {
  const uint64_t total = class_count(m, len);
  if (total <= 1) return true;
  auto ms = moves_at(level, true);
  return flood(m, member_of_class(m, len), *ms, total) >= total;
}

bool Scanner::connected_flood(int64_t m, int64_t level) const {
  const uint64_t total = factorization_count(m);
  if (total <= 1) return true;
  const auto lens = lengths_of(m);
  auto ms = moves_at(level, false);
  return flood(m, member_of_class(m, lens.front()), *ms, total) >= total;
}

bool Scanner::connected_via_classes(int64_t m, int64_t level) const {
  const auto lens = lengths_of(m);
  const size_t L = lens.size();
  if (L <= 1) return true;
  UnionFind uf(static_cast<int32_t>(L));
  // Consecutive pairs usually chain the classes already.
  for (size_t i = 1; i < L; ++i)
    if (min_cross(m, lens[i - 1], lens[i]) <= level)
      uf.unite(static_cast<int32_t>(i - 1), static_cast<int32_t>(i));
  for (size_t i = 0; i < L && uf.comps > 1; ++i)
    for (size_t j = i + 1; j < L && uf.comps > 1; ++j) {
      if (uf.find(static_cast<int32_t>(i)) == uf.find(static_cast<int32_t>(j))) continue;
      if (min_cross(m, lens[i], lens[j]) <= level) uf.unite(static_cast<int32_t>(i), static_cast<int32_t>(j));
    }
  return uf.comps == 1;
}

bool Scanner::cross_moves_exist(int64_t level) const { return moves_at(level, false)->has_cross; }

int64_t Scanner::equivalent_degree(int64_t m) const {
  const auto lens = lengths_of(m);
  if (lens.empty()) fail(errc::not_in_monoid, std::to_string(m) + " is not in the monoid");
  std::vector<int64_t> multi;
  uint64_t total = 0, pair_work = 0;
  for (int64_t len : lens) {
    const uint64_t c = class_count(m, len);
    total = sat_add(total, c);
    pair_work = sat_add(pair_work, c * c);
    if (c >= 2) multi.push_back(len);
  }
  if (multi.empty()) return 0;

  if (total <= static_cast<uint64_t>(kPairwiseTotalCap) && pair_work <= kPairSquaredCap) {
    const FactorizationSet fs = enumerate(monoid_, m);
    int64_t best = 0;
    for (const auto& [len, idx] : fs.by_length())
      if (idx.size() >= 2) best = std::max(best, pairwise_bottleneck(fs, idx).value);
    return best;
  }

  int64_t best = 0;
  for (int64_t len : multi) {
    if (class_connected_at(m, len, 2)) {
      best = std::max<int64_t>(best, 2);
      continue;
    }
    // Doubling then bisection; the class is complete at level len.
    int64_t lo = 3, hi = 4;
    while (hi < len && !class_connected_at(m, len, hi)) {
      lo = hi + 1;
      hi = std::min(hi * 2, len);
    }
    while (lo < hi) {
      const int64_t mid = lo + (hi - lo) / 2;
      if (class_connected_at(m, len, mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    best = std::max(best, lo);
  }
  return best;
}

int64_t Scanner::catenary_degree(int64_t m) const {
  const uint64_t total = factorization_count(m);
  if (total == 0) fail(errc::not_in_monoid, std::to_string(m) + " is not in the monoid");
  if (total <= 1) return 0;

  if (total <= static_cast<uint64_t>(kPairwiseTotalCap)) {
    const FactorizationSet fs = enumerate(monoid_, m);
    return pairwise_bottleneck(fs, all_indices(fs)).value;
  }

  const int64_t c_eq = equivalent_degree(m);
  const int64_t c_adj = adjacent_degree(m);
  const int64_t max_len = lengths_of(m).back();
  auto feasible = [&](int64_t level) {
    return level >= c_eq ? connected_via_classes(m, level) : connected_flood(m, level);
  };
  int64_t hi = std::max<int64_t>({2, c_eq, c_adj});
  while (!feasible(hi)) {
    if (hi >= max_len) fail(errc::invalid_argument, "internal error: Z(m) disconnected at the maximum length");
    hi = std::min(hi * 2, max_len);
  }
  int64_t lo = 2;
  while (lo < hi) {
    const int64_t mid = lo + (hi - lo) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// ---------------------------------------------------------------------------
// Element-level free functions
// ---------------------------------------------------------------------------

int64_t catenary(const NumericalMonoid& M, int64_t m) {
  require_member(M, m);
  return Scanner(M, m, true).catenary_degree(m);
}

int64_t equivalent(const NumericalMonoid& M, int64_t m) {
  require_member(M, m);
  return Scanner(M, m, true).equivalent_degree(m);
}

int64_t adjacent(const NumericalMonoid& M, int64_t m) {
  require_member(M, m);
  return Scanner(M, m, false).adjacent_degree(m);
}

int64_t monotone(const NumericalMonoid& M, int64_t m) {
  require_member(M, m);
  Scanner s(M, m, true);
  return std::max(s.equivalent_degree(m), s.adjacent_degree(m));
}

int64_t monotone_direct(const NumericalMonoid& M, int64_t m) {
  require_member(M, m);
  const FactorizationSet fs = enumerate(M, m, kMonotoneCap);
  const size_t n = fs.size();
  if (n <= 1) return 0;

  std::vector<uint32_t> dist(n * n, 0);
  std::vector<uint32_t> candidates;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const uint32_t d = static_cast<uint32_t>(distance(fs[i], fs[j]));
      dist[i * n + j] = dist[j * n + i] = d;
      candidates.push_back(d);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::pair<int64_t, std::vector<int32_t>>> classes;
  for (const auto& [len, idx] : fs.by_length()) classes.emplace_back(len, idx);

  size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const size_t mid = lo + (hi - lo) / 2;
    if (monotone_feasible(fs, classes, dist, candidates[mid]).feasible)
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

// ---------------------------------------------------------------------------
// Betti elements
// ---------------------------------------------------------------------------

bool is_betti(const NumericalMonoid& M, int64_t m) {
  if (m <= 0) fail(errc::not_in_monoid, "Betti test requires a positive monoid element");
  require_member(M, m);
  const FactorizationSet fs = enumerate(M, m);
  const size_t n = fs.size();
  if (n <= 1) return false;
  // Factorizations sharing a positive coordinate are support-adjacent; union
  // per coordinate chains every such clique.
  UnionFind uf(static_cast<int32_t>(n));
  const size_t k = fs[0].dim();
  for (size_t c = 0; c < k; ++c) {
    int32_t prev = -1;
    for (size_t i = 0; i < n; ++i) {
      if (fs[i][c] > 0) {
        if (prev >= 0) uf.unite(prev, static_cast<int32_t>(i));
        prev = static_cast<int32_t>(i);
      }
    }
  }
  return uf.comps > 1;
}

BettiScan betti_elements(const NumericalMonoid& M) {
  if (M.dim() < 2) fail(errc::invalid_argument, "Betti scan requires at least two generators");
  const auto& gens = M.generators();
  BettiScan scan;
  scan.heuristic = M.dim() > 3;
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<int64_t> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    int64_t c = 1;
    for (; c <= kBettiCoefficientGuard; ++c)
      if (representable(others, checked_mul(c, gens[i]))) break;
    if (c > kBettiCoefficientGuard)
      fail_guard(errc::explosion_guard, "Betti coefficient for generator " + std::to_string(gens[i]) +
                                            " exceeds the guard");
    scan.coefficients.push_back(c);
    scan.bound = std::max(scan.bound, checked_mul(c, gens[i]));
  }
  for (int64_t m = gens.front(); m <= scan.bound; ++m)
    if (M.contains(m) && is_betti(M, m)) scan.elements.push_back(m);
  return scan;
}

// ---------------------------------------------------------------------------
// Set-level invariants
// ---------------------------------------------------------------------------

int64_t default_scan_bound(const NumericalMonoid& M) {
  return checked_add(M.frobenius(), checked_mul(2, checked_mul(M.generators().back(), M.dim())));
}

InvariantReport monoid_catenary(const NumericalMonoid& M) {
  const BettiScan scan = betti_elements(M);
  int64_t best = 0;
  for (int64_t b : scan.elements) best = std::max(best, catenary(M, b));
  return InvariantReport(best, Exactness::exact, Method::betti_scan, scan.bound, scan.heuristic);
}

int64_t dim3_equivalent_closed(const NumericalMonoid& M) {
  if (M.dim() != 3) fail(errc::not_dimension3, "closed form requires a three-generator basis");
  const auto& g = M.generators();
  return (g[2] - g[0]) / gcd64(g[2] - g[0], g[1] - g[0]);
}

InvariantReport monoid_equivalent(const NumericalMonoid& M, std::optional<int64_t> scan_bound) {
  if (M.dim() < 2) fail(errc::invalid_argument, "set-level invariants require at least two generators");
  if (M.dim() == 3)
    return InvariantReport(dim3_equivalent_closed(M), Exactness::exact, Method::closed_form);
  const int64_t bound = scan_bound.value_or(default_scan_bound(M));
  if (bound < M.multiplicity()) fail(errc::missing_bound, "scan bound below the multiplicity");
  int64_t best = 0;
  for (int64_t m = M.multiplicity(); m <= bound; ++m)
    if (M.contains(m)) best = std::max(best, equivalent(M, m));
  return InvariantReport(best, Exactness::observed_lower_bound, Method::bounded_scan, bound);
}

InvariantReport monoid_adjacent(const NumericalMonoid& M, std::optional<int64_t> scan_bound) {
  if (M.dim() < 2) fail(errc::invalid_argument, "set-level invariants require at least two generators");
  const int64_t bound = scan_bound.value_or(default_scan_bound(M));
  if (bound < M.multiplicity()) fail(errc::missing_bound, "scan bound below the multiplicity");
  Scanner s(M, bound, false);
  int64_t best = 0;
  for (int64_t m = M.multiplicity(); m <= bound; ++m)
    if (M.contains(m)) best = std::max(best, s.adjacent_degree(m));
  return InvariantReport(best, Exactness::observed_lower_bound, Method::bounded_scan, bound);
}

InvariantReport monoid_monotone(const NumericalMonoid& M, std::optional<int64_t> scan_bound) {
  const InvariantReport eq = monoid_equivalent(M, scan_bound);
  const InvariantReport adj = monoid_adjacent(M, scan_bound);
  // Weakest input exactness wins.
  const Exactness ex = (eq.exactness == Exactness::exact && adj.exactness == Exactness::exact)
                           ? Exactness::exact
                           : Exactness::observed_lower_bound;
  std::optional<int64_t> bound;
  if (eq.scan_bound || adj.scan_bound)
    bound = std::max(eq.scan_bound.value_or(0), adj.scan_bound.value_or(0));
  return InvariantReport(std::max(eq.value, adj.value), ex, Method::max_formula, bound);
}

// ---------------------------------------------------------------------------
// Witnesses
// ---------------------------------------------------------------------------

namespace {

int32_t index_of(const FactorizationSet& fs, const Factorization& z) {
  for (size_t i = 0; i < fs.size(); ++i)
    if (fs[i] == z) return static_cast<int32_t>(i);
  fail(errc::invalid_factorization, "not a factorization of " + std::to_string(fs.element()));
}

}  // namespace

std::optional<ChainWitness> chain_between(const NumericalMonoid& M, int64_t m, const Factorization& from,
                                          const Factorization& to, ChainKind kind, int64_t level) {
  require_member(M, m);
  const FactorizationSet fs = enumerate(M, m, kWitnessCap);
  int32_t src = index_of(fs, from);
  int32_t dst = index_of(fs, to);
  bool reversed = false;
  if (kind == ChainKind::monotone && fs[src].length() > fs[dst].length()) {
    std::swap(src, dst);
    reversed = true;
  }
  const size_t n = fs.size();
  std::vector<int32_t> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int32_t> queue{src};
  seen[src] = 1;
  auto allowed = [&](int32_t a, int32_t b) {
    if (distance(fs[a], fs[b]) > level) return false;
    switch (kind) {
      case ChainKind::regular: return true;
      case ChainKind::equal_length: return fs[a].length() == fs[b].length();
      case ChainKind::monotone: return fs[a].length() <= fs[b].length();
    }
    return false;
  };
  for (size_t head = 0; head < queue.size(); ++head) {
    const int32_t a = queue[head];
    if (a == dst) break;
    for (int32_t b = 0; b < static_cast<int32_t>(n); ++b) {
      if (!seen[b] && allowed(a, b)) {
        seen[b] = 1;
        parent[b] = a;
        queue.push_back(b);
      }
    }
  }
  if (!seen[dst]) return std::nullopt;
  std::vector<Factorization> steps;
  for (int32_t at = dst; at != -1; at = parent[at]) steps.push_back(fs[at]);
  if (!reversed) std::reverse(steps.begin(), steps.end());
  return make_chain_witness(std::move(steps));
}

std::optional<std::pair<Factorization, Factorization>> disconnection_witness(const NumericalMonoid& M,
                                                                             int64_t m, int64_t level,
                                                                             ChainKind kind) {
  require_member(M, m);
  const FactorizationSet fs = enumerate(M, m, kWitnessCap);
  const size_t n = fs.size();
  if (n <= 1) return std::nullopt;

  if (kind == ChainKind::regular) {
    UnionFind uf(static_cast<int32_t>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (distance(fs[i], fs[j]) <= level) uf.unite(static_cast<int32_t>(i), static_cast<int32_t>(j));
    if (uf.comps == 1) return std::nullopt;
    const int32_t root = uf.find(0);
    for (size_t i = 1; i < n; ++i)
      if (uf.find(static_cast<int32_t>(i)) != root) return std::make_pair(fs[0], fs[i]);
    return std::nullopt;
  }

  if (kind == ChainKind::equal_length) {
    UnionFind uf(static_cast<int32_t>(n));
    for (const auto& [len, idx] : fs.by_length())
      for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
          if (distance(fs[idx[a]], fs[idx[b]]) <= level) uf.unite(idx[a], idx[b]);
    for (const auto& [len, idx] : fs.by_length())
      for (size_t a = 1; a < idx.size(); ++a)
        if (uf.find(idx[a]) != uf.find(idx[0])) return std::make_pair(fs[idx[0]], fs[idx[a]]);
    return std::nullopt;
  }

  std::vector<uint32_t> dist(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const uint32_t d = static_cast<uint32_t>(distance(fs[i], fs[j]));
      dist[i * n + j] = dist[j * n + i] = d;
    }
  std::vector<std::pair<int64_t, std::vector<int32_t>>> classes;
  for (const auto& [len, idx] : fs.by_length()) classes.emplace_back(len, idx);
  const MonotoneCheck check = monotone_feasible(fs, classes, dist, level);
  if (check.feasible) return std::nullopt;
  return std::make_pair(fs[check.from], fs[check.to]);
}

ElementInvariants element_invariants(const NumericalMonoid& M, int64_t m, bool with_witnesses) {
  require_member(M, m);
  Scanner s(M, m, true);
  ElementInvariants out;
  out.element = m;
  out.profile = s.profile(m);
  out.factorization_count = s.factorization_count(m);
  out.equivalent = s.equivalent_degree(m);
  out.adjacent = s.adjacent_degree(m);
  out.catenary = s.catenary_degree(m);
  out.monotone = std::max(out.equivalent, out.adjacent);

  if (!with_witnesses || out.factorization_count > static_cast<uint64_t>(kWitnessCap)) return out;
  const FactorizationSet fs = enumerate(M, m, kWitnessCap);

  if (out.catenary > 0) {
    const BottleneckResult r = pairwise_bottleneck(fs, all_indices(fs));
    out.catenary_witness = chain_between(M, m, fs[r.a], fs[r.b], ChainKind::regular, out.catenary);
  }
  if (out.equivalent > 0) {
    for (const auto& [len, idx] : fs.by_length()) {
      if (idx.size() < 2) continue;
      const BottleneckResult r = pairwise_bottleneck(fs, idx);
      if (r.value == out.equivalent) {
        out.equivalent_witness =
            chain_between(M, m, fs[r.a], fs[r.b], ChainKind::equal_length, out.equivalent);
        break;
      }
    }
  }
  if (out.adjacent > 0) {
    const auto& lens = out.profile.lengths;
    for (size_t i = 1; i < lens.size(); ++i) {
      if (s.min_cross(m, lens[i - 1], lens[i]) != out.adjacent) continue;
      const auto& lo_idx = fs.by_length().at(lens[i - 1]);
      const auto& hi_idx = fs.by_length().at(lens[i]);
      std::optional<std::pair<Factorization, Factorization>> best;
      for (int32_t a : lo_idx)
        for (int32_t b : hi_idx) {
          if (distance(fs[a], fs[b]) != out.adjacent) continue;
          auto cand = std::make_pair(fs[a], fs[b]);
          if (!best || cand < *best) best = cand;  // canonically least witness pair
        }
      if (best) {
        out.adjacent_witness = make_chain_witness({best->first, best->second});
        break;
      }
    }
  }
  if (out.monotone > 0) {
    if (out.monotone == out.equivalent && out.equivalent_witness)
      out.monotone_witness = out.equivalent_witness;
    else
      out.monotone_witness = out.adjacent_witness;
  }
  return out;
}

SetInvariants set_invariants(const NumericalMonoid& M, std::optional<int64_t> scan_bound) {
  SetInvariants out{monoid_catenary(M), monoid_equivalent(M, scan_bound),
                    monoid_adjacent(M, scan_bound), monoid_monotone(M, scan_bound),
                    betti_elements(M), M.frobenius()};
  return out;
}

}  // namespace catena
