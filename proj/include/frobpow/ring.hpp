#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobpow/poly.hpp"

namespace frobpow {

// Finitely presented algebra A = F_p[vars]/J with a fixed monomial order.
// relations may be empty (polynomial ring). Quotient arithmetic is realized
// by adjoining the relations to every ideal-level computation.
struct RingPresentation {
  AmbientPtr amb;
  std::vector<Poly> relations;

  uint32_t p() const { return amb->p(); }
  size_t nvars() const { return amb->nvars(); }
  bool is_regular_presentation() const { return relations.empty(); }
};

using RingPtr = std::shared_ptr<const RingPresentation>;

RingPtr make_ring(uint32_t p, std::vector<std::string> vars,
                  std::vector<std::string> relation_texts = {},
                  OrderKind order = OrderKind::grevlex);
RingPtr make_ring(AmbientPtr amb, std::vector<Poly> relations);

// expr := term (('+'|'-') term)* ; term := [int '*'] factor ('*' factor)* ;
// factor := var ['^' int] | int. Whitespace insignificant; integers are
// arbitrary precision, reduced mod p digit by digit.
Poly parse_poly(const std::string& text, const AmbientPtr& amb);
Poly parse_poly(const std::string& text, const RingPtr& ring);

// Ring literal: GF(p)[x,y,z] or GF(p)[x,y,z]/(f1,...,fk). GF(p)[] is the
// field itself (zero variables), usable as a trivial fiber.
RingPtr parse_ring(const std::string& text, OrderKind order = OrderKind::grevlex);

// f^q for q = p^e, computed term-wise (freshman's dream); rejects q that is
// not a power of the characteristic.
Poly frobenius_pow(const Poly& f, uint64_t q);

std::string to_string(const RingPresentation& ring);

}  // namespace frobpow
