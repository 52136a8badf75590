#pragma once

#include <optional>

#include "frobpow/ideal.hpp"
#include "frobpow/rational.hpp"
#include "frobpow/report.hpp"

namespace frobpow {

// q = p^e, computed exactly and capped by configuration.
struct FrobeniusExponent {
  int e = 0;
  uint64_t q = 1;

  static FrobeniusExponent make(uint32_t p, int e);
  // Validates that q is a power of p and recovers e.
  static FrobeniusExponent from_q(uint32_t p, uint64_t q);
};

// How to pick the multiplier c (and its power N) for tight closure tests.
// unit is only valid in a regular presentation (J = 0), where I* = I makes
// every verdict unconditional. jacobian picks the first nonvanishing partial
// derivative of a hypersurface relation; some power of such a c is a test
// element, but which power is not effective, hence the explicit N.
struct TestElementStrategy {
  enum class Mode { unit, explicit_elem, jacobian };
  Mode mode = Mode::unit;
  std::optional<Poly> c;  // explicit_elem
  int power = 2;          // N

  static TestElementStrategy unit() { return {}; }
  static TestElementStrategy explicit_elem(Poly c, int N = 2);
  static TestElementStrategy jacobian(int N = 2);
};

struct ResolvedTestElement {
  Poly c;
  int N = 1;
  bool unit = false;  // regular ring: verdicts are unconditional
};

// Validates the strategy against the ring and produces the concrete (c, N).
ResolvedTestElement resolve_strategy(const RingPtr& ring, const TestElementStrategy& s);

struct TestExponentCertificate {
  enum class Provenance { regular_ring, user_asserted };
  Poly c;
  uint64_t Q = 1;
  Provenance provenance = Provenance::user_asserted;
};

TestExponentCertificate regular_ring_certificate(const RingPtr& ring);

enum class ClosureStatus {
  in_ideal,
  in_frobenius_closure,
  certified_in,
  evidence_in,
  excluded_assuming,
  not_m_primary,
};

const char* to_string(ClosureStatus s);

struct EvidenceRow {
  int e = 0;
  uint64_t q = 1;
  std::string check;
  bool pass = false;
};

struct ClosureVerdict {
  ClosureStatus status = ClosureStatus::excluded_assuming;
  uint64_t witness_q = 0;  // least membership q / first exclusion q
  int emax = 0;
  std::string c_text;  // multiplier echo, empty for unit
  int N = 0;
  bool unconditional = false;
  std::vector<EvidenceRow> evidence;

  bool in_closure_evidence() const {
    return status == ClosureStatus::in_ideal ||
           status == ClosureStatus::in_frobenius_closure ||
           status == ClosureStatus::certified_in ||
           status == ClosureStatus::evidence_in;
  }
  // Membership that does not depend on any test-element assumption.
  bool hard_membership() const {
    return status == ClosureStatus::in_ideal ||
           status == ClosureStatus::in_frobenius_closure ||
           (status == ClosureStatus::certified_in && unconditional);
  }
};

// I^[q]: generated by the q-th powers of the generators (independent of the
// generating set since Frobenius is a ring endomorphism).
Ideal frobenius_power(const Ideal& I, const FrobeniusExponent& q);
Ideal frobenius_power(const Ideal& I, uint64_t q);

// Least q = p^e, e <= emax with u^q in I^[q]; membership in I^F is only
// semi-decided, so "not found" is an evidence verdict, never a proof.
ClosureVerdict frobenius_closure_test(const Poly& u, const Ideal& I, int emax);

ClosureVerdict tight_closure_test(const Poly& u, const Ideal& I,
                                  const TestElementStrategy& strat,
                                  const std::optional<TestExponentCertificate>& cert,
                                  int emax);

struct CandidateEntry {
  Monomial rep;
  ClosureVerdict verdict;
};

struct TightClosureCandidate {
  Ideal candidate;
  std::vector<CandidateEntry> entries;  // one per standard monomial of A/I
  bool unconditional = false;           // exact I* when true
};

// I + (standard-monomial representatives of A/I that test into the
// closure), each tagged with its verdict strength.
TightClosureCandidate tight_closure_candidate(const Ideal& I,
                                              const TestElementStrategy& strat,
                                              int emax);

struct HKRow {
  int e = 0;
  uint64_t q = 1;
  int64_t len = 0;
  Rational ratio;
};

struct HKTable {
  int dim = 0;
  std::vector<HKRow> rows;

  std::string csv() const;  // columns e,q,length,ratio_num,ratio_den
};

// Exact lengths l(A/I^[q]) for e = 0..emax and exact ratios l/q^d; the
// limit is never extrapolated.
HKTable hilbert_kunz(const Ideal& I, int emax);

struct TauTruncation {
  std::vector<Ideal> tau;     // tau_t = cap_{s<=t} levels[s], t = 1..tmax
  std::vector<Ideal> levels;  // (I_t : I_t*cand) per level
  bool stabilized = false;
  bool unconditional = false;
  std::vector<std::string> notes;
};

// tau_t = cap_{s<=t} (I_s : I_s*cand) with I_s = (z_1^s,...,z_d^s); requires
// A Gorenstein along z (1-dimensional socle) so the I_s are irreducible.
TauTruncation tau_truncated(const RingPtr& ring, const std::vector<Poly>& z,
                            int tmax, const TestElementStrategy& strat, int emax);

// T I*cand = T I comparison (strong test ideal property for one instance).
VerificationReport strong_test_ideal_check(const Ideal& T, const Ideal& I,
                                           const TestElementStrategy& strat, int emax);

// Frobenius closure of (z) has no witness up to emax (semi-decided evidence)
// / tight closure candidate of (z) equals (z).
VerificationReport f_injectivity_check(const RingPtr& ring, const std::vector<Poly>& z,
                                       int emax);
VerificationReport f_rationality_check(const RingPtr& ring, const std::vector<Poly>& z,
                                       const TestElementStrategy& strat, int emax);

struct TestExponentReport {
  uint64_t empirical_bound = 1;  // exp >= this
  bool certified = false;        // regular ring: exp = 1 with c = 1
  std::vector<EvidenceRow> hits;
  std::vector<std::string> notes;
};

// Largest q <= p^emax at which some excluded representative u still passes
// c u^q in I^[q]; the empirical bound is p times that q.
TestExponentReport test_exponent_search(const Poly& c, const Ideal& I,
                                        const TestElementStrategy& strat, int emax);

}  // namespace frobpow
