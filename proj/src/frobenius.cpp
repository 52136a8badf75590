#include "frobpow/frobenius.hpp"

#include <algorithm>

#include "frobpow/config.hpp"

namespace frobpow {

FrobeniusExponent FrobeniusExponent::make(uint32_t p, int e) {
  if (e < 0) fail_validate("Frobenius exponent e must be >= 0");
  FrobeniusExponent r;
  r.e = e;
  r.q = 1;
  for (int i = 0; i < e; ++i) {
    if (r.q > config().q_cap / p)
      fail_resource("q = p^e exceeds the configured cap");
    r.q *= p;
  }
  return r;
}

FrobeniusExponent FrobeniusExponent::from_q(uint32_t p, uint64_t q) {
  FrobeniusExponent r;
  while (r.q < q) {
    if (r.q > config().q_cap / p) break;
    r.q *= p;
    r.e += 1;
  }
  if (r.q != q)
    fail_validate(std::to_string(q) + " is not a power of p = " + std::to_string(p));
  return r;
}

TestElementStrategy TestElementStrategy::explicit_elem(Poly c, int N) {
  TestElementStrategy s;
  s.mode = Mode::explicit_elem;
  s.c = std::move(c);
  s.power = N;
  return s;
}

TestElementStrategy TestElementStrategy::jacobian(int N) {
  TestElementStrategy s;
  s.mode = Mode::jacobian;
  s.power = N;
  return s;
}

namespace {

Poly partial_derivative(const Poly& f, int var) {
  const AmbientPtr& amb = f.ambient();
  const PrimeField& F = amb->field;
  std::vector<Term> ts;
  for (const Term& t : f.terms()) {
    int32_t e = t.mono.exp[var];
    if (e == 0) continue;
    uint32_t c = F.mul(t.coeff, F.reduce_i64(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.exp[var] -= 1;
    ts.push_back(Term{c, std::move(m)});
  }
  return Poly(amb, std::move(ts));
}

bool nonzero_in_ring(const RingPtr& ring, const Poly& c) {
  return !normal_form(c, Ideal(ring, {})).is_zero();
}

// Bracket powers I^[p^e] for e = 0..emax, as handles sharing one Groebner
// cache each, so a sweep over many candidates costs one basis per level.
std::vector<Ideal> bracket_powers(const Ideal& I, int emax) {
  uint32_t p = I.ring()->p();
  std::vector<Ideal> powers;
  powers.reserve(size_t(emax) + 1);
  for (int e = 0; e <= emax; ++e)
    powers.push_back(frobenius_power(I, FrobeniusExponent::make(p, e)));
  return powers;
}

ClosureVerdict tight_closure_test_impl(const Poly& u, const Ideal& I,
                                       const std::vector<Ideal>& powers,
                                       const ResolvedTestElement& rte,
                                       const std::optional<TestExponentCertificate>& cert,
                                       int emax) {
  const RingPtr& ring = I.ring();
  uint32_t p = ring->p();

  ClosureVerdict v;
  v.emax = emax;
  v.c_text = rte.unit ? "" : to_string(rte.c);
  v.N = rte.N;

  // (a) plain membership
  if (contains(I, u)) {
    v.status = ClosureStatus::in_ideal;
    v.unconditional = true;
    return v;
  }

  // (b) Frobenius closure witness: I^F is contained in I*.
  for (int e = 1; e <= emax; ++e) {
    uint64_t q = FrobeniusExponent::make(p, e).q;
    bool in = contains(powers[size_t(e)], u.frobenius(q));
    v.evidence.push_back({e, q, "u^q in I^[q]", in});
    if (in) {
      v.status = ClosureStatus::in_frobenius_closure;
      v.witness_q = q;
      v.unconditional = true;
      return v;
    }
  }

  // (c) test-exponent certificate: one membership at q >= Q decides.
  if (cert) {
    if (cert->provenance == TestExponentCertificate::Provenance::regular_ring &&
        !ring->is_regular_presentation())
      fail_validate("regular-ring certificate used on a non-regular presentation");
    FrobeniusExponent fe;
    while (fe.q < cert->Q) fe = FrobeniusExponent::make(p, fe.e + 1);
    Ideal Iq = fe.e <= emax ? powers[size_t(fe.e)] : frobenius_power(I, fe);
    bool in = contains(Iq, cert->c * u.frobenius(fe.q));
    v.evidence.push_back({fe.e, fe.q, "cert: c u^q in I^[q], q >= Q", in});
    if (in) {
      v.status = ClosureStatus::certified_in;
      v.witness_q = fe.q;
      v.unconditional =
          cert->provenance == TestExponentCertificate::Provenance::regular_ring;
      return v;
    }
  }

  // (d)/(e) c^N u^q in I^[q] for e = 1..emax.
  Poly cN = rte.c.pow(uint64_t(rte.N));
  for (int e = 1; e <= emax; ++e) {
    uint64_t q = FrobeniusExponent::make(p, e).q;
    bool in = contains(powers[size_t(e)], cN * u.frobenius(q));
    v.evidence.push_back({e, q, "c^N u^q in I^[q]", in});
    if (!in) {
      v.status = ClosureStatus::excluded_assuming;
      v.witness_q = q;
      // Sound exclusion only if c^N really is a test element; that holds
      // unconditionally in the regular case.
      v.unconditional = rte.unit;
      return v;
    }
  }
  v.status = ClosureStatus::evidence_in;
  v.unconditional = false;
  return v;
}

}  // namespace

ResolvedTestElement resolve_strategy(const RingPtr& ring, const TestElementStrategy& s) {
  ResolvedTestElement r;
  switch (s.mode) {
    case TestElementStrategy::Mode::unit:
      if (!ring->is_regular_presentation())
        fail_validate("unit test-element strategy requires a regular "
                      "presentation (no relations)");
      r.c = Poly::constant(ring->amb, 1);
      r.N = 1;
      r.unit = true;
      return r;
    case TestElementStrategy::Mode::explicit_elem: {
      if (!s.c) fail_validate("explicit test-element strategy without element");
      if (s.power < 1) fail_validate("test-element power N must be >= 1");
      Poly c = s.c->ambient() == ring->amb ? *s.c : Poly(ring->amb, s.c->terms());
      if (!nonzero_in_ring(ring, c))
        fail_validate("test element is zero in the ring");
      r.c = c;
      r.N = s.power;
      r.unit = ring->is_regular_presentation() && c == Poly::constant(ring->amb, 1);
      return r;
    }
    case TestElementStrategy::Mode::jacobian: {
      if (s.power < 1) fail_validate("test-element power N must be >= 1");
      if (ring->relations.size() != 1)
        fail_validate("jacobian strategy needs a hypersurface presentation; "
                      "pass an explicit test element for this ring");
      for (size_t i = 0; i < ring->nvars(); ++i) {
        Poly d = partial_derivative(ring->relations[0], int(i));
        if (!d.is_zero() && nonzero_in_ring(ring, d)) {
          r.c = normal_form(d, Ideal(ring, {}));
          r.N = s.power;
          return r;
        }
      }
      fail_validate("jacobian strategy: all partial derivatives vanish in the ring");
    }
  }
  fail_validate("unknown test-element strategy");
}

TestExponentCertificate regular_ring_certificate(const RingPtr& ring) {
  if (!ring->is_regular_presentation())
    fail_validate("regular-ring certificate requires a regular presentation");
  TestExponentCertificate c;
  c.c = Poly::constant(ring->amb, 1);
  c.Q = 1;
  c.provenance = TestExponentCertificate::Provenance::regular_ring;
  return c;
}

const char* to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::in_ideal: return "InIdeal";
    case ClosureStatus::in_frobenius_closure: return "InFrobeniusClosure";
    case ClosureStatus::certified_in: return "CertifiedIn";
    case ClosureStatus::evidence_in: return "EvidenceIn";
    case ClosureStatus::excluded_assuming: return "ExcludedAssuming";
    case ClosureStatus::not_m_primary: return "NotMPrimaryError";
  }
  return "?";
}

Ideal frobenius_power(const Ideal& I, const FrobeniusExponent& q) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const Poly& g : I.gens()) gens.push_back(g.frobenius(q.q));
  return Ideal(I.ring(), std::move(gens));
}

Ideal frobenius_power(const Ideal& I, uint64_t q) {
  return frobenius_power(I, FrobeniusExponent::from_q(I.ring()->p(), q));
}

ClosureVerdict frobenius_closure_test(const Poly& u, const Ideal& I, int emax) {
  ClosureVerdict v;
  v.emax = emax;
  if (contains(I, u)) {
    v.status = ClosureStatus::in_ideal;
    v.unconditional = true;
    return v;
  }
  uint32_t p = I.ring()->p();
  std::vector<Ideal> powers = bracket_powers(I, emax);
  for (int e = 1; e <= emax; ++e) {
    uint64_t q = FrobeniusExponent::make(p, e).q;
    bool in = contains(powers[size_t(e)], u.frobenius(q));
    v.evidence.push_back({e, q, "u^q in I^[q]", in});
    if (in) {
      v.status = ClosureStatus::in_frobenius_closure;
      v.witness_q = q;
      v.unconditional = true;
      return v;
    }
  }
  // No witness up to emax: exclusion evidence only; membership in I^F is
  // semi-decided.
  v.status = ClosureStatus::excluded_assuming;
  v.unconditional = false;
  return v;
}

ClosureVerdict tight_closure_test(const Poly& u, const Ideal& I,
                                  const TestElementStrategy& strat,
                                  const std::optional<TestExponentCertificate>& cert,
                                  int emax) {
  ResolvedTestElement rte = resolve_strategy(I.ring(), strat);
  std::vector<Ideal> powers = bracket_powers(I, emax);
  return tight_closure_test_impl(u, I, powers, rte, cert, emax);
}

TightClosureCandidate tight_closure_candidate(const Ideal& I,
                                              const TestElementStrategy& strat,
                                              int emax) {
  if (!is_m_primary(I))
    fail_validate("tight_closure_candidate: ideal is not m-primary");
  const RingPtr& ring = I.ring();
  ResolvedTestElement rte = resolve_strategy(ring, strat);
  StandardMonomialBasis basis = standard_monomials(I);
  std::vector<Ideal> powers = bracket_powers(I, emax);

  TightClosureCandidate out;
  std::vector<Poly> gens = I.gens();
  bool all_unconditional = true;
  for (const Monomial& m : basis.monomials) {
    Poly u = Poly::monomial(ring->amb, m);
    ClosureVerdict v = tight_closure_test_impl(u, I, powers, rte, std::nullopt, emax);
    if (v.in_closure_evidence()) gens.push_back(u);
    all_unconditional = all_unconditional && v.unconditional;
    out.entries.push_back({m, std::move(v)});
  }
  out.candidate = Ideal(ring, std::move(gens));
  out.unconditional = all_unconditional;
  return out;
}

std::string HKTable::csv() const {
  std::string s = "e,q,length,ratio_num,ratio_den\n";
  for (const HKRow& r : rows) {
    s += std::to_string(r.e) + "," + std::to_string(r.q) + "," +
         std::to_string(r.len) + "," + std::to_string(r.ratio.num) + "," +
         std::to_string(r.ratio.den) + "\n";
  }
  return s;
}

HKTable hilbert_kunz(const Ideal& I, int emax) {
  if (!is_m_primary(I))
    fail_validate("hilbert_kunz: ideal is not m-primary");
  const RingPtr& ring = I.ring();
  uint32_t p = ring->p();
  HKTable table;
  table.dim = krull_dim(ring);
  for (int e = 0; e <= emax; ++e) {
    FrobeniusExponent fe = FrobeniusExponent::make(p, e);
    int64_t len = length(frobenius_power(I, fe));
    int64_t qd = 1;
    for (int i = 0; i < table.dim; ++i) qd = Rational::checked_mul(qd, int64_t(fe.q));
    table.rows.push_back({e, fe.q, len, Rational(len, qd)});
  }
  return table;
}

TauTruncation tau_truncated(const RingPtr& ring, const std::vector<Poly>& z,
                            int tmax, const TestElementStrategy& strat, int emax) {
  if (tmax < 1) fail_validate("tau_truncated: tmax must be >= 1");
  Ideal Z(ring, z);
  if (!is_m_primary(Z)) fail_validate("tau_truncated: (z) is not m-primary");
  if (!is_parameter_ideal(Z))
    fail_validate("tau_truncated: z is not a system of parameters");

  TauTruncation out;
  out.unconditional = true;
  Ideal acc;
  for (int t = 1; t <= tmax; ++t) {
    std::vector<Poly> powers;
    powers.reserve(z.size());
    for (const Poly& zi : z) powers.push_back(zi.pow(uint64_t(t)));
    Ideal It(ring, powers);
    std::vector<Poly> soc = socle(It);
    if (soc.size() != 1)
      fail_validate("tau_truncated: socle of (z)^[" + std::to_string(t) +
                    "] has dimension " + std::to_string(soc.size()) +
                    "; the truncation ideals must be irreducible");
    TightClosureCandidate cand = tight_closure_candidate(It, strat, emax);
    out.unconditional = out.unconditional && cand.unconditional;
    Ideal Ct = colon_ideal(It, cand.candidate);
    acc = (t == 1) ? Ct : intersect(acc, Ct);
    out.levels.push_back(Ct);
    out.tau.push_back(acc);
  }
  out.stabilized =
      out.tau.size() >= 2 &&
      equal_ideals(out.tau[out.tau.size() - 1], out.tau[out.tau.size() - 2]);
  if (!out.unconditional)
    out.notes.push_back("closure candidates are conditional outside regular rings");
  return out;
}

VerificationReport strong_test_ideal_check(const Ideal& T, const Ideal& I,
                                           const TestElementStrategy& strat, int emax) {
  VerificationReport rep;
  rep.identity = "strong-test-ideal";
  rep.param("T", to_string(T));
  rep.param("I", to_string(I));
  rep.param("emax", std::to_string(emax));

  TightClosureCandidate cand = tight_closure_candidate(I, strat, emax);
  rep.conditional = !cand.unconditional;
  Ideal left = product(T, cand.candidate);
  Ideal right = product(T, I);
  rep.add("T * I*cand = T * I", to_string(left), to_string(right),
          equal_ideals(left, right));
  if (rep.conditional)
    rep.note("I* computed as a candidate (closure verdicts are conditional "
             "outside regular rings)");
  return rep;
}

VerificationReport f_injectivity_check(const RingPtr& ring, const std::vector<Poly>& z,
                                       int emax) {
  VerificationReport rep;
  rep.identity = "f-injectivity";
  rep.param("ring", to_string(*ring));
  rep.param("emax", std::to_string(emax));
  if (!is_regular_sequence(ring, z))
    fail_validate("f_injectivity_check: z is not a regular sequence");

  Ideal Z(ring, z);
  if (!is_m_primary(Z)) fail_validate("f_injectivity_check: (z) is not m-primary");
  StandardMonomialBasis basis = standard_monomials(Z);
  std::vector<Ideal> powers = bracket_powers(Z, emax);
  uint32_t p = ring->p();
  bool witness = false;
  for (const Monomial& m : basis.monomials) {
    Poly u = Poly::monomial(ring->amb, m);
    for (int e = 1; e <= emax && !witness; ++e) {
      uint64_t q = FrobeniusExponent::make(p, e).q;
      if (contains(powers[size_t(e)], u.frobenius(q))) {
        witness = true;
        rep.add("Frobenius closure witness: u = " + to_string(u) +
                    ", q = " + std::to_string(q),
                "u^q in (z)^[q]", "u outside (z)", false);
      }
    }
    if (witness) break;
  }
  if (!witness) {
    rep.add("no Frobenius-closure witness up to e = " + std::to_string(emax),
            "(z)^F truncation", "(z)", true);
    rep.conditional = true;
    rep.note("F-injectivity is evidence only: no witness up to emax does not "
             "prove Frobenius closedness");
  }
  return rep;
}

VerificationReport f_rationality_check(const RingPtr& ring, const std::vector<Poly>& z,
                                       const TestElementStrategy& strat, int emax) {
  VerificationReport rep;
  rep.identity = "f-rationality";
  rep.param("ring", to_string(*ring));
  rep.param("emax", std::to_string(emax));
  if (!is_regular_sequence(ring, z))
    fail_validate("f_rationality_check: z is not a regular sequence");
  Ideal Z(ring, z);
  if (!is_parameter_ideal(Z))
    fail_validate("f_rationality_check: z is not a system of parameters");

  TightClosureCandidate cand = tight_closure_candidate(Z, strat, emax);
  rep.conditional = !cand.unconditional;
  rep.add("tight_closure_candidate((z)) = (z)", to_string(cand.candidate),
          to_string(Z), equal_ideals(cand.candidate, Z));
  int strongest = 0;
  for (const CandidateEntry& en : cand.entries)
    if (en.verdict.in_closure_evidence() &&
        en.verdict.status != ClosureStatus::in_ideal)
      strongest++;
  if (strongest > 0)
    rep.note(std::to_string(strongest) + " basis element(s) test into the closure");
  if (rep.conditional)
    rep.note("verdicts conditional outside regular rings");
  return rep;
}

TestExponentReport test_exponent_search(const Poly& c, const Ideal& I,
                                        const TestElementStrategy& strat, int emax) {
  if (!is_m_primary(I))
    fail_validate("test_exponent_search: ideal is not m-primary");
  const RingPtr& ring = I.ring();
  uint32_t p = ring->p();
  TightClosureCandidate cand = tight_closure_candidate(I, strat, emax);
  std::vector<Ideal> powers = bracket_powers(I, emax);

  TestExponentReport rep;
  uint64_t worst_q = 0;
  for (const CandidateEntry& en : cand.entries) {
    if (en.verdict.in_closure_evidence()) continue;
    Poly u = Poly::monomial(ring->amb, en.rep);
    for (int e = 1; e <= emax; ++e) {
      uint64_t q = FrobeniusExponent::make(p, e).q;
      if (contains(powers[size_t(e)], c * u.frobenius(q))) {
        rep.hits.push_back({e, q,
                            "excluded u = " + to_string(u) + " passes c u^q in I^[q]",
                            true});
        worst_q = std::max(worst_q, q);
      }
    }
  }
  rep.empirical_bound = worst_q > 0 ? uint64_t(p) * worst_q : 1;

  if (ring->is_regular_presentation()) {
    // Frobenius is free over a regular ring: u^q in I^[q] already forces
    // u in I, so exp = 1 with c = 1.
    rep.certified = true;
    rep.notes.push_back("regular ring: exp = 1 certified with c = 1");
  }
  if (rep.hits.empty())
    rep.notes.push_back("no excluded representative passes at any q <= p^emax");
  return rep;
}

}  // namespace frobpow
