#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atlas {

// Error hierarchy shared by the whole library.  CLI maps domain_error -> exit 1
// and parse_error -> exit 2.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct overflow_error : error {
  explicit overflow_error(const std::string& what) : error("overflow: " + what) {}
};

struct domain_error : error {
  explicit domain_error(const std::string& what) : error(what) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

using i64 = std::int64_t;

// All integer arithmetic in the library goes through these; wraparound is a bug,
// not a mode of operation.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("mul");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 checked_abs(i64 a) { return a < 0 ? checked_neg(a) : a; }

inline i64 gcd_i64(i64 a, i64 b) {
  a = checked_abs(a);
  b = checked_abs(b);
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline i64 lcm_i64(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(checked_abs(a) / gcd_i64(a, b), checked_abs(b));
}

// Floor division and the matching nonnegative remainder.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline i64 pos_mod(i64 a, i64 b) {
  i64 r = a % b;
  if (r < 0) r += checked_abs(b);
  return r;
}

}  // namespace atlas
