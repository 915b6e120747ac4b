#include "catena/factorization.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace catena {

Factorization::Factorization(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(errc::invalid_factorization, "coefficient vector is empty");
  int64_t len = 0;
  for (int64_t c : coeffs_) {
    if (c < 0) fail(errc::invalid_factorization, "negative coefficient " + std::to_string(c));
    len = checked_add(len, c);
  }
  length_ = len;
}

Factorization Factorization::checked(const NumericalMonoid& M, int64_t element, std::vector<int64_t> coeffs) {
  Factorization z(std::move(coeffs));
  if (z.dim() != static_cast<size_t>(M.dim()))
    fail(errc::dimension_mismatch, "coefficient vector has dimension " + std::to_string(z.dim()) +
                                       ", basis has " + std::to_string(M.dim()));
  if (z.element_of(M) != element)
    fail(errc::invalid_factorization,
         "coefficients do not factor " + std::to_string(element));
  return z;
}

int64_t Factorization::element_of(const NumericalMonoid& M) const {
  const auto& gens = M.generators();
  if (coeffs_.size() != gens.size())
    fail(errc::dimension_mismatch, "coefficient/basis dimension mismatch");
  int64_t sum = 0;
  for (size_t i = 0; i < gens.size(); ++i) sum = checked_add(sum, checked_mul(coeffs_[i], gens[i]));
  return sum;
}

int64_t vec_length(const std::vector<int64_t>& v) {
  int64_t len = 0;
  for (int64_t c : v) len = checked_add(len, c);
  return len;
}

std::vector<int64_t> gcd_fact(const Factorization& a, const Factorization& b) {
  if (a.dim() != b.dim())
    fail(errc::dimension_mismatch, "gcd of factorizations with dimensions " + std::to_string(a.dim()) +
                                       " and " + std::to_string(b.dim()));
  std::vector<int64_t> g(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) g[i] = std::min(a[i], b[i]);
  return g;
}

int64_t distance(const Factorization& a, const Factorization& b) {
  if (a.dim() != b.dim())
    fail(errc::dimension_mismatch, "distance between factorizations of dimensions " +
                                       std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  int64_t overlap = 0;
  for (size_t i = 0; i < a.dim(); ++i) overlap += std::min(a[i], b[i]);
  return std::max(a.length(), b.length()) - overlap;
}

FactorizationSet::FactorizationSet(int64_t element, std::vector<Factorization> all)
    : element_(element), all_(std::move(all)) {
  for (size_t i = 0; i < all_.size(); ++i)
    by_length_[all_[i].length()].push_back(static_cast<int32_t>(i));
}

int64_t default_factorization_cap() {
  static const int64_t cap = [] {
    if (const char* env = std::getenv("MONOID_MAX_FACTORIZATIONS")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end != env && v > 0) return static_cast<int64_t>(v);
    }
    return int64_t(1'000'000);
  }();
  return cap;
}

namespace {

// Descent over basis positions left to right, coefficient from floor(rem/n)
// down to 0; emits vectors in lexicographically descending order.
void descend(const std::vector<int64_t>& gens, size_t pos, int64_t rem, std::vector<int64_t>& acc,
             std::vector<Factorization>& out, int64_t cap) {
  if (pos + 1 == gens.size()) {
    if (rem % gens[pos] == 0) {
      acc[pos] = rem / gens[pos];
      if (static_cast<int64_t>(out.size()) >= cap)
        fail_guard(errc::explosion_guard,
                   "factorization count exceeds cap " + std::to_string(cap));
      out.emplace_back(acc);
      acc[pos] = 0;
    }
    return;
  }
  for (int64_t c = rem / gens[pos]; c >= 0; --c) {
    acc[pos] = c;
    descend(gens, pos + 1, rem - c * gens[pos], acc, out, cap);
  }
  acc[pos] = 0;
}

}  // namespace

FactorizationSet enumerate(const NumericalMonoid& M, int64_t m, std::optional<int64_t> cap) {
  if (m < 0) fail(errc::invalid_argument, "enumerate requires m >= 0 (got " + std::to_string(m) + ")");
  const int64_t limit = cap.value_or(default_factorization_cap());
  std::vector<Factorization> out;
  std::vector<int64_t> acc(M.generators().size(), 0);
  descend(M.generators(), 0, m, acc, out, limit);
  return FactorizationSet(m, std::move(out));
}

LengthProfile length_profile(const FactorizationSet& fs) {
  if (fs.empty()) fail(errc::empty_set, "element " + std::to_string(fs.element()) + " has no factorizations");
  LengthProfile p;
  for (const auto& [len, idx] : fs.by_length()) p.lengths.push_back(len);
  p.min_length = p.lengths.front();
  p.max_length = p.lengths.back();
  for (size_t i = 1; i < p.lengths.size(); ++i) p.delta.push_back(p.lengths[i] - p.lengths[i - 1]);
  std::sort(p.delta.begin(), p.delta.end());
  p.delta.erase(std::unique(p.delta.begin(), p.delta.end()), p.delta.end());
  return p;
}

LengthProfile length_profile_of(const NumericalMonoid& M, int64_t m) {
  if (m < 0 || !M.contains(m)) fail(errc::empty_set, std::to_string(m) + " is not in the monoid");
  // feasible[s] holds the values expressible with exactly s coins, as bits.
  const auto& gens = M.generators();
  const size_t words = static_cast<size_t>(m) / 64 + 1;
  const int64_t max_len = m / gens.front();
  std::vector<uint64_t> prev(words, 0), cur;
  prev[0] = 1;  // value 0, zero coins
  LengthProfile p;
  if (m == 0) {
    p.lengths = {0};
    p.min_length = p.max_length = 0;
    return p;
  }
  const size_t mw = static_cast<size_t>(m) / 64;
  const uint64_t mbit = uint64_t(1) << (static_cast<size_t>(m) % 64);
  for (int64_t s = 1; s <= max_len; ++s) {
    cur.assign(words, 0);
    for (int64_t g : gens) {
      const size_t wsh = static_cast<size_t>(g) / 64, bsh = static_cast<size_t>(g) % 64;
      for (size_t w = words; w-- > wsh;) {
        uint64_t v = prev[w - wsh] << bsh;
        if (bsh && w > wsh) v |= prev[w - wsh - 1] >> (64 - bsh);
        cur[w] |= v;
      }
    }
    if (cur[mw] & mbit) p.lengths.push_back(s);
    prev.swap(cur);
  }
  p.min_length = p.lengths.front();
  p.max_length = p.lengths.back();
  for (size_t i = 1; i < p.lengths.size(); ++i) p.delta.push_back(p.lengths[i] - p.lengths[i - 1]);
  std::sort(p.delta.begin(), p.delta.end());
  p.delta.erase(std::unique(p.delta.begin(), p.delta.end()), p.delta.end());
  return p;
}

}  // namespace catena
