#pragma once

// Test-only brute-force oracles. These deliberately re-derive every quantity
// from the definitions (naive recursion, N-iteration, per-pair search) and
// stay independent of the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "catena/factorization.hpp"
#include "catena/monoid.hpp"

namespace oracle {

inline bool contains(const std::vector<int64_t>& gens, int64_t m) {
  if (m < 0) return false;
  if (m == 0) return true;
  for (int64_t g : gens)
    if (g <= m && contains(gens, m - g)) return true;
  return false;
}

// Sieve up to n1 * nk; every Apery value lies below it.
inline std::vector<int64_t> apery(const std::vector<int64_t>& gens) {
  const int64_t n1 = gens.front();
  const int64_t hi = n1 * gens.back() + n1 + 1;
  std::vector<char> in(static_cast<size_t>(hi) + 1, 0);
  in[0] = 1;
  for (int64_t v = 1; v <= hi; ++v)
    for (int64_t g : gens)
      if (g <= v && in[static_cast<size_t>(v - g)]) {
        in[static_cast<size_t>(v)] = 1;
        break;
      }
  std::vector<int64_t> ap(static_cast<size_t>(n1), -1);
  for (int64_t v = 0; v <= hi; ++v)
    if (in[static_cast<size_t>(v)] && ap[static_cast<size_t>(v % n1)] < 0) ap[static_cast<size_t>(v % n1)] = v;
  return ap;
}

inline int64_t frobenius(const std::vector<int64_t>& gens) {
  const auto ap = apery(gens);
  return *std::max_element(ap.begin(), ap.end()) - gens.front();
}

// Nested loops, up to three generators.
inline std::vector<std::vector<int64_t>> enumerate_upto3(const std::vector<int64_t>& gens, int64_t m) {
  std::vector<std::vector<int64_t>> out;
  if (gens.size() == 1) {
    if (m % gens[0] == 0) out.push_back({m / gens[0]});
    return out;
  }
  if (gens.size() == 2) {
    for (int64_t x = 0; x * gens[0] <= m; ++x) {
      const int64_t rem = m - x * gens[0];
      if (rem % gens[1] == 0) out.push_back({x, rem / gens[1]});
    }
    return out;
  }
  for (int64_t x = 0; x * gens[0] <= m; ++x)
    for (int64_t y = 0; x * gens[0] + y * gens[1] <= m; ++y) {
      const int64_t rem = m - x * gens[0] - y * gens[1];
      if (rem % gens[2] == 0) out.push_back({x, y, rem / gens[2]});
    }
  return out;
}

inline int64_t vlen(const std::vector<int64_t>& v) {
  int64_t s = 0;
  for (int64_t c : v) s += c;
  return s;
}

inline int64_t distance(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  int64_t overlap = 0;
  for (size_t i = 0; i < a.size(); ++i) overlap += std::min(a[i], b[i]);
  return std::max(vlen(a), vlen(b)) - overlap;
}

inline int64_t fs_distance(const catena::FactorizationSet& fs, size_t i, size_t j) {
  return distance(fs[i].coeffs(), fs[j].coeffs());
}

inline bool connected_at(const catena::FactorizationSet& fs, const std::vector<int32_t>& nodes,
                         int64_t level, bool same_length_only) {
  if (nodes.size() <= 1) return true;
  std::vector<char> seen(nodes.size(), 0);
  std::vector<size_t> queue{0};
  seen[0] = 1;
  size_t reached = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const size_t a = queue[head];
    for (size_t b = 0; b < nodes.size(); ++b) {
      if (seen[b]) continue;
      if (same_length_only && fs[nodes[a]].length() != fs[nodes[b]].length()) continue;
      if (fs_distance(fs, nodes[a], nodes[b]) > level) continue;
      seen[b] = 1;
      ++reached;
      queue.push_back(b);
    }
  }
  return reached == nodes.size();
}

// Smallest N with Z(m) connected under edges of distance <= N.
inline int64_t catenary(const catena::FactorizationSet& fs) {
  if (fs.size() <= 1) return 0;
  std::vector<int32_t> nodes;
  for (size_t i = 0; i < fs.size(); ++i) nodes.push_back(static_cast<int32_t>(i));
  for (int64_t n = 0;; ++n)
    if (connected_at(fs, nodes, n, false)) return n;
}

inline int64_t equivalent(const catena::FactorizationSet& fs) {
  int64_t best = 0;
  for (const auto& [len, idx] : fs.by_length()) {
    if (idx.size() < 2) continue;
    for (int64_t n = 0;; ++n)
      if (connected_at(fs, idx, n, true)) {
        best = std::max(best, n);
        break;
      }
  }
  return best;
}

inline int64_t adjacent(const catena::FactorizationSet& fs) {
  std::vector<std::pair<int64_t, std::vector<int32_t>>> classes(fs.by_length().begin(),
                                                                fs.by_length().end());
  int64_t best = 0;
  for (size_t c = 1; c < classes.size(); ++c) {
    int64_t mn = -1;
    for (int32_t a : classes[c - 1].second)
      for (int32_t b : classes[c].second) {
        const int64_t d = fs_distance(fs, a, b);
        if (mn < 0 || d < mn) mn = d;
      }
    best = std::max(best, mn);
  }
  return best;
}

// Every ordered pair with |z| <= |z'| reachable in the directed graph with
// edges u -> v iff |u| <= |v| and d(u, v) <= N; smallest such N.
inline bool monotone_feasible(const catena::FactorizationSet& fs, int64_t level) {
  const size_t n = fs.size();
  for (size_t i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    std::vector<size_t> queue{i};
    seen[i] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      const size_t a = queue[head];
      for (size_t b = 0; b < n; ++b) {
        if (seen[b]) continue;
        if (fs[a].length() > fs[b].length()) continue;
        if (fs_distance(fs, a, b) > level) continue;
        seen[b] = 1;
        queue.push_back(b);
      }
    }
    for (size_t j = 0; j < n; ++j)
      if (fs[i].length() <= fs[j].length() && !seen[j]) return false;
  }
  return true;
}

inline int64_t monotone(const catena::FactorizationSet& fs) {
  if (fs.size() <= 1) return 0;
  for (int64_t n = 0;; ++n)
    if (monotone_feasible(fs, n)) return n;
}

inline bool is_betti(const catena::FactorizationSet& fs) {
  const size_t n = fs.size();
  if (n <= 1) return false;
  std::vector<char> seen(n, 0);
  std::vector<size_t> queue{0};
  seen[0] = 1;
  size_t reached = 1;
  auto overlap = [&](size_t a, size_t b) {
    for (size_t c = 0; c < fs[a].dim(); ++c)
      if (fs[a][c] > 0 && fs[b][c] > 0) return true;
    return false;
  };
  for (size_t head = 0; head < queue.size(); ++head)
    for (size_t b = 0; b < n; ++b)
      if (!seen[b] && overlap(queue[head], b)) {
        seen[b] = 1;
        ++reached;
        queue.push_back(b);
      }
  return reached < n;
}

}  // namespace oracle
