#include "picard3/arith.hpp"

#include <stdexcept>

namespace picard3 {

Rat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  Int num, den(1);
  auto parse_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("malformed rational: " + part);
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("malformed rational: " + part);
    return Int(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) {
    num = parse_int(s);
  } else {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  }
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(x.get_si());
}

Int mod_floor(const Int& x, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  if (m < 0) m = -m;
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

namespace {

Int squarefree_int(Int n) {
  if (n == 0) throw std::invalid_argument("squarefree part of zero");
  Int sign = n < 0 ? -1 : 1;
  n = abs(n);
  Int out(1);
  for (Int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return sign * out * n;
}

}  // namespace

Int squarefree_part(const Rat& x) {
  // num/den and num*den lie in the same square class.
  return squarefree_int(Int(x.get_num() * x.get_den()));
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("prime divisors of zero");
  if (n < 0) n = -n;
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace picard3
