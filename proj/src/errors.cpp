#include "catena/errors.hpp"

#include <numeric>

namespace catena {

const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_generators: return "EmptyGenerators";
    case errc::zero_generator: return "ZeroGenerator";
    case errc::non_coprime: return "NonCoprime";
    case errc::overflow: return "Overflow";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::explosion_guard: return "ExplosionGuard";
    case errc::not_in_monoid: return "NotInMonoid";
    case errc::empty_set: return "EmptySet";
    case errc::missing_bound: return "MissingBound";
    case errc::not_dimension3: return "NotDimension3";
    case errc::invalid_factorization: return "InvalidFactorization";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::no_target_factorization: return "NoTargetFactorization";
    case errc::invalid_family: return "InvalidFamily";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow, "64-bit addition overflow (" + std::to_string(a) + " + " + std::to_string(b) + ")");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::overflow, "64-bit multiplication overflow (" + std::to_string(a) + " * " + std::to_string(b) + ")");
  return r;
}

int64_t gcd64(int64_t a, int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace catena
