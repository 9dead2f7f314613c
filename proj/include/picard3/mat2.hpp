#pragma once

#include <cstdint>
#include <string>

namespace picard3 {

struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t det() const { return a * d - b * c; }
  std::int64_t trace() const { return a + d; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  // Adjugate; the inverse when det = 1 and -inverse when det = -1.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  // Inverse for det = +-1.
  Mat2 inverse() const {
    Mat2 adj = adjugate();
    return det() == 1 ? adj : -adj;
  }
  // Representative of {+-M} with first nonzero entry positive.
  Mat2 normalized() const {
    std::int64_t first = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
    return first < 0 ? -*this : *this;
  }
  bool is_scalar_identity() const { return b == 0 && c == 0 && a == d && (a == 1 || a == -1); }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

inline std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
         std::to_string(m.d) + "]]";
}

}  // namespace picard3
