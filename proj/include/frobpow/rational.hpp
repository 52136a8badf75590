#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "frobpow/error.hpp"

namespace frobpow {

// Exact rational with 64-bit parts and overflow-checked multiplication.
// Large enough for every length/q^d ratio within the configured q cap.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) fail_validate("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  static int64_t checked_mul(int64_t a, int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN)
      fail_resource("rational arithmetic overflow");
    return int64_t(r);
  }

  Rational operator*(const Rational& o) const {
    return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
  }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<=(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num)
                    : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace frobpow
