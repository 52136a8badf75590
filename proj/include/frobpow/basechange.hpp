#pragma once

#include "frobpow/frobenius.hpp"

namespace frobpow {

// Closed fiber T on a variable block disjoint from the base, together with
// a homogeneous system of parameters z of T (empty when dim T = 0).
struct FiberPresentation {
  RingPtr T;
  std::vector<Poly> z;
};

// Split extension S = R tensor_{F_p} T: variables and relations are the
// disjoint unions, so R -> S is flat with closed fiber T by construction.
struct FlatExtension {
  RingPtr R;
  FiberPresentation fiber;
  RingPtr S;

  Poly embed_base(const Poly& f) const;   // R -> S
  Poly embed_fiber(const Poly& f) const;  // T -> S
  Ideal extend(const Ideal& I) const;     // IS
  std::vector<Poly> fiber_z_in_s() const;
  Ideal m_base_in_s() const;  // (vars of R) S
};

FlatExtension build_extension(const RingPtr& R, const FiberPresentation& fiber);

// (I + (z)^[t])S with generators gens(I) and z_i^t. bracket = true insists
// that t is a power of p (true Frobenius power of (z)); either way the
// generated ideal is (z_1^t, ..., z_d^t)S.
Ideal extend_ideal(const FlatExtension& X, const Ideal& I, int64_t t, bool bracket);

// l_S(S/(I^[q], z^[q])S) = l_R(R/I^[q]) l_S(S/(mS + z^[q])S) for q = p^e,
// e in [e_min, e_max]; exact freeness identity, zero tolerance.
VerificationReport check_length_identity(const FlatExtension& X, const Ideal& I,
                                         int e_min, int e_max);

// Row-wise ratio identity ratio_S = ratio_R * ratio_T with ratio_T taken at
// (z)^[q] in the fiber.
VerificationReport check_hk_multiplicativity(const FlatExtension& X, const Ideal& I,
                                             int e_min, int e_max);

// Row-wise surrogate of e_HK(S) <= e(T) e_HK(R), with both proof
// ingredients checked per row as well.
VerificationReport check_kunz_inequality(const FlatExtension& X, int e_min, int e_max);

// Evidence that (I + (z)^[t])S is tightly closed: the base ideal must
// verify as tightly closed first (hard witnesses reject the precondition),
// then the extended ideal's closure candidate must equal the ideal.
VerificationReport check_tightly_closed_extension(const FlatExtension& X, const Ideal& I,
                                                  int64_t t,
                                                  const TestElementStrategy& strat,
                                                  int emax);

// Empirical test-exponent transfer: bound for (c^2, I) in R dominates the
// bound for (c, IS + zS) in S.
VerificationReport check_test_exponent_transfer(const FlatExtension& X, const Poly& c,
                                                const Ideal& I,
                                                const TestElementStrategy& strat,
                                                int emax);

// Finite-truncation form of the test-ideal extension: per level t,
// (J_t : J_t*cand) = (I_t : I_t*cand)S + (z)^[t]S where I_t = (z_R)^[t] and
// J_t = (I_t, z^[t])S; the limit-level agreement tau_t(R)S vs tau_t(S) is
// recorded informationally (it holds on the nose only for 0-dimensional
// fibers, where the (z)-tail is empty).
VerificationReport check_tau_extension(const FlatExtension& X,
                                       const std::vector<Poly>& z_base, int tmax,
                                       const TestElementStrategy& strat, int emax);

// Strategy usable on S: the resolved base element times the product of the
// fiber s.o.p. (which avoids the fiber's minimal primes); unit when S is
// regular.
TestElementStrategy strategy_for_extension(const FlatExtension& X,
                                           const TestElementStrategy& base_strat);

}  // namespace frobpow
