#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace picard3 {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// n/d in lowest terms; d != 0.
inline Rat frac(const Int& n, const Int& d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(std::string_view text);
std::string to_string(const Int& x);
std::string to_string(const Rat& q);

// Fits-in-int64 conversion; throws std::overflow_error otherwise.
std::int64_t to_i64(const Int& x);

// Floor-style remainder in [0, |m|).
Int mod_floor(const Int& x, const Int& m);
std::int64_t mod_floor(std::int64_t x, std::int64_t m);

// Representative of x modulo (Q^x)^2: the unique squarefree integer in the same class. x != 0.
Int squarefree_part(const Rat& x);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

// Distinct prime divisors of |n| in increasing order. n != 0.
std::vector<std::int64_t> prime_divisors(std::int64_t n);

}  // namespace picard3
