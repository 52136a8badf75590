#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "frobpow/ring.hpp"

namespace frobpow {

// Ideal of A = F_p[vars]/J given by generators. The cached basis is the
// reduced Groebner basis of (gens) + J in the ambient polynomial ring, so
// normal forms decide membership in the quotient. The cache is filled at
// most once per handle family; concurrent readers block on the first
// computation and then share it.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring);
  static Ideal maximal(const RingPtr& ring);  // (all variables)

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Reduced Groebner basis of gens + relations (monic, self-reduced, sorted
  // ascending by leading monomial). Canonical for (ideal, order).
  const std::vector<Poly>& groebner() const;

  bool is_unit_ideal() const;
  bool is_zero_ideal() const { return groebner().empty(); }

private:
  RingPtr ring_;
  std::vector<Poly> gens_;

  struct Cache {
    std::once_flag once;
    std::vector<Poly> gb;
    std::exception_ptr error;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

// Reduced Groebner basis of the given polynomials (no quotient relations).
// Deterministic: normal selection strategy (lowest lcm degree, ties by
// declaration order), canonical reduced output.
std::vector<Poly> buchberger(const AmbientPtr& amb, const std::vector<Poly>& gens);

// Remainder of f under multivariate division by the basis of I;
// normal_form(f, I) == 0 iff f lies in I inside A.
Poly normal_form(const Poly& f, const Ideal& I);
Poly normal_form_by_basis(const Poly& f, const std::vector<Poly>& basis);

bool contains(const Ideal& I, const Poly& f);

// Ideal equality via canonical reduced bases.
bool equal_ideals(const Ideal& I, const Ideal& J);
bool contains_ideal(const Ideal& I, const Ideal& J);  // J subset of I

Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);

// (I : f) = {g : g f in I}. Colon by (an element that is) zero in A is the
// unit ideal; that is a legitimate answer, not an error.
Ideal colon(const Ideal& I, const Poly& f);
Ideal colon_ideal(const Ideal& I, const Ideal& J);

// I cap J via the t*I + (1-t)*J elimination construction.
Ideal intersect(const Ideal& I, const Ideal& J);

struct StandardMonomialBasis {
  bool finite = false;
  std::vector<Monomial> monomials;  // ascending in the ambient order
};

// Monomials outside the leading-term ideal; explicit infinite marker when a
// variable has no pure power among the leading terms. cap == 0 uses the
// configured monomial cap.
StandardMonomialBasis standard_monomials(const Ideal& I, int64_t cap = 0);

// dim_{F_p} A/I for zero-dimensional I; the residue field is F_p, so length
// equals vector-space dimension.
int64_t length(const Ideal& I);

// dim A/I as the maximal size of a variable subset independent modulo the
// leading-term ideal. Unit ideal yields the sentinel -1.
int krull_dim(const Ideal& I);

int krull_dim(const RingPtr& ring);  // dim A

bool is_zero_dimensional(const Ideal& I);
bool is_m_primary(const Ideal& I);  // zero-dimensional and proper

// Socle basis of A/I, i.e. a vector-space basis of (I : m)/I represented by
// normal forms; requires I m-primary.
std::vector<Poly> socle(const Ideal& I);
bool is_irreducible(const Ideal& I);

// n generators of height >= n (height = dim A - dim A/I; valid for the
// equidimensional presentations this artifact ships).
bool is_parameter_ideal(const Ideal& I);

// z_1..z_k a regular sequence on A: ((z_1..z_{i-1}) : z_i) = (z_1..z_{i-1}).
bool is_regular_sequence(const RingPtr& ring, const std::vector<Poly>& z);

std::string to_string(const Ideal& I);

}  // namespace frobpow
