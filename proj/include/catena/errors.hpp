#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catena {

enum class errc {
  empty_generators,
  zero_generator,
  non_coprime,
  overflow,
  dimension_mismatch,
  explosion_guard,
  not_in_monoid,
  empty_set,
  missing_bound,
  not_dimension3,
  invalid_factorization,
  precondition_failed,
  no_target_factorization,
  invalid_family,
  invalid_argument,
};

const char* errc_name(errc c);

// Base class for library errors. what() names the violated precondition.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Invalid input or violated precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A resource guard tripped: the instance is too large for exact computation.
class GuardError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail(errc c, const std::string& msg) { throw ValidationError(c, msg); }
[[noreturn]] inline void fail_guard(errc c, const std::string& msg) { throw GuardError(c, msg); }

// Checked 64-bit arithmetic: overflow raises, never wraps.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

int64_t gcd64(int64_t a, int64_t b);

// ceil(a / b) for b > 0.
inline int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

}  // namespace catena
