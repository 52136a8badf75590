#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frobpow/field.hpp"
#include "frobpow/monomial.hpp"

namespace frobpow {

// The ambient polynomial ring F_p[vars] with its monomial order. Shared and
// immutable; two polynomials are compatible iff they share one (or a
// structurally equal one).
struct Ambient {
  PrimeField field;
  std::vector<std::string> vars;
  OrderSpec order;

  Ambient(uint32_t p, std::vector<std::string> vars_, OrderSpec ord)
      : field(p), vars(std::move(vars_)), order(ord) {}

  uint32_t p() const { return field.characteristic(); }
  size_t nvars() const { return vars.size(); }

  bool same_structure(const Ambient& o) const {
    return p() == o.p() && vars == o.vars && order.kind == o.order.kind &&
           order.elim == o.order.elim;
  }

  int var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return int(i);
    return -1;
  }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(uint32_t p, std::vector<std::string> vars,
                        OrderSpec order = {});

struct Term {
  uint32_t coeff;  // in [1, p): zero coefficients never stored
  Monomial mono;
};

// Sparse polynomial with terms sorted strictly descending in the ambient
// order; the empty term list is 0.
class Poly {
public:
  Poly() = default;
  explicit Poly(AmbientPtr amb) : amb_(std::move(amb)) {}
  // Terms need not be normalized; they are sorted and combined.
  Poly(AmbientPtr amb, std::vector<Term> terms);

  static Poly zero(const AmbientPtr& amb) { return Poly(amb); }
  static Poly constant(const AmbientPtr& amb, uint32_t c);
  static Poly monomial(const AmbientPtr& amb, Monomial m, uint32_t c = 1);
  static Poly variable(const AmbientPtr& amb, int index);

  const AmbientPtr& ambient() const { return amb_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  size_t nterms() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  uint32_t leading_coeff() const { return leading_term().coeff; }

  int64_t degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  Poly operator+(const Poly& g) const;
  Poly operator-(const Poly& g) const;
  Poly operator-() const;
  Poly operator*(const Poly& g) const;

  Poly scaled(uint32_t c) const;                       // c * this
  Poly times_term(uint32_t c, const Monomial& m) const;  // c*m * this
  Poly monic() const;
  Poly pow(uint64_t k) const;  // repeated multiplication

  // this^q computed term-wise; valid for q = p^e since Frobenius is a ring
  // endomorphism and coefficients live in the prime field.
  Poly frobenius(uint64_t q) const;

  bool operator==(const Poly& g) const;
  bool operator!=(const Poly& g) const { return !(*this == g); }

  // Total-order on polynomials (by term sequences); used only to sort
  // generator lists deterministically.
  static int cmp(const Poly& f, const Poly& g);

private:
  AmbientPtr amb_;
  std::vector<Term> terms_;

  void normalize();
};

void require_same_ambient(const Poly& f, const Poly& g);

std::string to_string(const Poly& f);
std::string to_string(const Monomial& m, const Ambient& amb);

}  // namespace frobpow
