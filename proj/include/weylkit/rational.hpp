#pragma once

// Exact arithmetic primitives. Everything downstream assumes no rounding,
// so floating point never appears in this library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wk {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Int = long long;

inline BigInt num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign(const Rat& r) { return r.sign(); }

// Largest integer <= r.
inline BigInt rat_floor(const Rat& r) {
  BigInt q = num(r) / den(r);
  if (r < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline Int to_int_checked(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw std::overflow_error("big integer out of Int range: " + v.str());
  return static_cast<Int>(v);
}

inline Int to_int_checked(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("expected integer, got " + r.str());
  return to_int_checked(num(r));
}

inline std::string to_string(const Rat& r) { return r.str(); }

}  // namespace wk
