#pragma once

#include <cstdint>

#include "frobpow/error.hpp"

namespace frobpow {

// Arithmetic in F_p, 2 <= p < 2^31, elements stored as canonical residues
// in [0, p). Products fit in 64 bits without overflow.
class PrimeField {
public:
  explicit PrimeField(uint32_t p) : p_(p) {
    if (p < 2 || !is_prime(p))
      fail_validate("characteristic must be a prime in [2, 2^31): got " +
                    std::to_string(p));
  }

  uint32_t characteristic() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t s = uint64_t(a) + b;
    return s >= p_ ? uint32_t(s - p_) : uint32_t(s);
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : uint32_t(uint64_t(a) + p_ - b);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return uint32_t((uint64_t(a) * b) % p_);
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t r = 1, base = a % p_;
    while (e) {
      if (e & 1) r = (r * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return uint32_t(r);
  }

  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) fail_validate("division by zero in F_p");
    // Fermat: a^(p-2); p is prime.
    return pow(a, p_ - 2);
  }

  uint32_t reduce_i64(int64_t v) const {
    int64_t r = v % int64_t(p_);
    return uint32_t(r < 0 ? r + p_ : r);
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return n < (uint32_t(1) << 31);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  uint32_t p_;
};

}  // namespace frobpow
