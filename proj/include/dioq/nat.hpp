#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dioq {

// Arbitrary-precision natural number. Values are never negative by
// construction; all arithmetic in this project stays in ℕ.
using Nat = boost::multiprecision::cpp_int;

inline bool fits_u64(const Nat& n) {
  return n >= 0 && n <= std::numeric_limits<std::uint64_t>::max();
}

inline std::uint64_t to_u64(const Nat& n) {
  if (!fits_u64(n)) throw std::overflow_error("natural too large for u64: " + n.str());
  return n.convert_to<std::uint64_t>();
}

inline std::string nat_str(const Nat& n) { return n.str(); }

// Parses a decimal natural. Rejects empty strings, signs, and non-digits.
inline Nat nat_from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty numeral");
  for (char c : s)
    if (c < '0' || c > '9') throw std::invalid_argument("bad digit in numeral: " + s);
  return Nat(s);
}

inline std::size_t bit_length(const Nat& n) {
  return n == 0 ? 0 : boost::multiprecision::msb(n) + 1;
}

}  // namespace dioq
