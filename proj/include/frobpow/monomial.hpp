#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "frobpow/error.hpp"

namespace frobpow {

// Exponent vector; length always equals the ambient variable count.
struct Monomial {
  std::vector<int32_t> exp;

  static Monomial one(size_t nvars) { return Monomial{std::vector<int32_t>(nvars, 0)}; }

  size_t nvars() const { return exp.size(); }

  int64_t degree() const {
    int64_t d = 0;
    for (int32_t e : exp) d += e;
    return d;
  }

  bool is_one() const {
    for (int32_t e : exp)
      if (e) return false;
    return true;
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > m.exp[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] += m.exp[i];
    return r;
  }

  // Quotient this / m; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] -= m.exp[i];
    return r;
  }

  Monomial lcm(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i)
      if (m.exp[i] > r.exp[i]) r.exp[i] = m.exp[i];
    return r;
  }

  Monomial gcd(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i)
      if (m.exp[i] < r.exp[i]) r.exp[i] = m.exp[i];
    return r;
  }

  bool coprime(const Monomial& m) const {
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] && m.exp[i]) return false;
    return true;
  }

  Monomial pow(int64_t k) const {
    Monomial r = *this;
    for (size_t i = 0; i < exp.size(); ++i) {
      int64_t v = int64_t(r.exp[i]) * k;
      if (v > INT32_MAX)
        fail_resource("monomial exponent overflow while raising to power " +
                      std::to_string(k));
      r.exp[i] = int32_t(v);
    }
    return r;
  }

  bool operator==(const Monomial& m) const { return exp == m.exp; }
  bool operator!=(const Monomial& m) const { return exp != m.exp; }
};

enum class OrderKind { lex, grevlex };

// Monomial order on the ambient variables, in declaration order. elim > 0
// turns it into a block elimination order: the first `elim` variables are
// compared by total degree (then grevlex among themselves) before the
// remaining block is compared by `kind`. Used internally for intersections
// and colon ideals; user-facing rings have elim = 0.
struct OrderSpec {
  OrderKind kind = OrderKind::grevlex;
  int elim = 0;

  // Returns +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (elim > 0) {
      int64_t da = 0, db = 0;
      for (int i = 0; i < elim; ++i) { da += a.exp[i]; db += b.exp[i]; }
      if (da != db) return da > db ? 1 : -1;
      for (int i = elim - 1; i >= 0; --i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
      return cmp_block(a, b, elim);
    }
    return cmp_block(a, b, 0);
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

private:
  int cmp_block(const Monomial& a, const Monomial& b, int from) const {
    int n = int(a.exp.size());
    if (kind == OrderKind::lex) {
      for (int i = from; i < n; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      return 0;
    }
    int64_t da = 0, db = 0;
    for (int i = from; i < n; ++i) { da += a.exp[i]; db += b.exp[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (int i = n - 1; i >= from; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace frobpow
