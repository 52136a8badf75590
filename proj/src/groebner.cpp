#include <algorithm>
#include <set>

#include "frobpow/config.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow {

namespace {

Poly spoly(const Poly& f, const Poly& g) {
  const AmbientPtr& amb = f.ambient();
  const PrimeField& F = amb->field;
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Poly a = f.times_term(F.inv(f.leading_coeff()), l / f.leading_monomial());
  Poly b = g.times_term(F.inv(g.leading_coeff()), l / g.leading_monomial());
  return a - b;
}

// Full reduction: divisor scan in basis order; deterministic, and unique
// once the basis is reduced. The leading-term degrees are scanned through a
// flat array so the common no-divisor probe stays cheap.
Poly reduce_full(const Poly& f, const std::vector<Poly>& basis) {
  const AmbientPtr& amb = f.ambient();
  const PrimeField& F = amb->field;
  std::vector<int64_t> lt_deg(basis.size());
  for (size_t i = 0; i < basis.size(); ++i)
    lt_deg[i] = basis[i].leading_monomial().degree();
  Poly h = f;
  std::vector<Term> remainder;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    int64_t deg = lt.mono.degree();
    const Poly* divisor = nullptr;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (lt_deg[i] > deg) continue;
      if (basis[i].leading_monomial().divides(lt.mono)) { divisor = &basis[i]; break; }
    }
    if (divisor) {
      uint32_t c = F.mul(lt.coeff, F.inv(divisor->leading_coeff()));
      h = h - divisor->times_term(c, lt.mono / divisor->leading_monomial());
    } else {
      remainder.push_back(lt);
      h = h - Poly::monomial(amb, lt.mono, lt.coeff);
    }
  }
  return Poly(amb, std::move(remainder));
}

struct Pair {
  int64_t deg;  // total degree of the lcm; the lcm itself is recomputed at pop
  int j, i;     // i < j

  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

}  // namespace

Poly normal_form_by_basis(const Poly& f, const std::vector<Poly>& basis) {
  return reduce_full(f, basis);
}

std::vector<Poly> buchberger(const AmbientPtr& amb, const std::vector<Poly>& gens) {
  std::vector<Poly> G;
  int64_t max_input_deg = 0;
  for (const Poly& f : gens) {
    if (f.is_zero()) continue;
    max_input_deg = std::max(max_input_deg, f.degree());
    G.push_back(f.monic());
  }
  const int64_t cap = effective_degree_cap(max_input_deg);

  // Drop duplicate generators up front; they only create useless pairs.
  std::sort(G.begin(), G.end(), [](const Poly& a, const Poly& b) { return Poly::cmp(a, b) < 0; });
  G.erase(std::unique(G.begin(), G.end()), G.end());
  // Deterministic start: ascending leading monomials.
  std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
    return amb->order.less(a.leading_monomial(), b.leading_monomial());
  });

  std::set<Pair> pending;
  std::vector<std::vector<bool>> treated;  // treated[j][i], i < j: popped or skipped
  // Pointers into each member's term storage; stable because the term buffer
  // moves with the Poly when G reallocates and members are never mutated.
  std::vector<const Monomial*> lts;
  auto push_pairs_for = [&](int j) {
    lts.push_back(&G[size_t(j)].leading_monomial());
    treated.emplace_back(size_t(j), false);
    for (int i = 0; i < j; ++i)
      pending.insert(Pair{lts[size_t(i)]->lcm(*lts[size_t(j)]).degree(), j, i});
  };
  for (int j = 0; j < int(G.size()); ++j) push_pairs_for(j);

  auto is_treated = [&](int a, int b) {  // a != b
    return a < b ? treated[size_t(b)][size_t(a)] : treated[size_t(a)][size_t(b)];
  };

  while (!pending.empty()) {
    Pair pr = *pending.begin();
    pending.erase(pending.begin());
    treated[size_t(pr.j)][size_t(pr.i)] = true;

    // Buchberger's first criterion: coprime leading terms.
    if (lts[size_t(pr.i)]->coprime(*lts[size_t(pr.j)])) continue;
    // Chain criterion against pairs that were already treated.
    Monomial l = lts[size_t(pr.i)]->lcm(*lts[size_t(pr.j)]);
    bool skip = false;
    for (int k = 0; k < int(G.size()) && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!lts[size_t(k)]->divides(l)) continue;
      if (is_treated(k, pr.i) && is_treated(k, pr.j)) skip = true;
    }
    if (skip) continue;

    Poly r = reduce_full(spoly(G[size_t(pr.i)], G[size_t(pr.j)]), G);
    if (r.is_zero()) continue;
    if (r.degree() > cap)
      fail_resource("Groebner degree cap exceeded (" + std::to_string(r.degree()) +
                    " > " + std::to_string(cap) + "); raise --cap / FROBPOW_CAP");
    G.push_back(r.monic());
    push_pairs_for(int(G.size()) - 1);
  }

  // Minimalize: drop members whose leading term is divisible by another's.
  std::sort(G.begin(), G.end(), [&](const Poly& a, const Poly& b) {
    return amb->order.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Poly> minimal;
  for (const Poly& g : G) {
    bool redundant = false;
    for (const Poly& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) { redundant = true; break; }
    if (!redundant) minimal.push_back(g);
  }

  // Tail-reduce each member against the others to get the reduced basis.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_full(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return amb->order.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  if (!ring_) fail_validate("ideal needs a ring");
  for (const Poly& f : gens_)
    if (f.ambient() != ring_->amb && !f.ambient()->same_structure(*ring_->amb))
      fail_validate("ideal generator does not live in the ring's ambient");
}

Ideal Ideal::unit(const RingPtr& ring) {
  return Ideal(ring, {Poly::constant(ring->amb, 1)});
}

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Poly> vars;
  for (size_t i = 0; i < ring->nvars(); ++i)
    vars.push_back(Poly::variable(ring->amb, int(i)));
  return Ideal(ring, std::move(vars));
}

const std::vector<Poly>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] {
    try {
      std::vector<Poly> input = gens_;
      for (const Poly& r : ring_->relations) input.push_back(r);
      cache_->gb = buchberger(ring_->amb, input);
    } catch (...) {
      cache_->error = std::current_exception();
    }
  });
  if (cache_->error) std::rethrow_exception(cache_->error);
  return cache_->gb;
}

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Poly normal_form(const Poly& f, const Ideal& I) {
  if (f.ambient() != I.ring()->amb && !f.ambient()->same_structure(*I.ring()->amb))
    fail_validate("normal_form: ring mismatch");
  return reduce_full(f, I.groebner());
}

bool contains(const Ideal& I, const Poly& f) { return normal_form(f, I).is_zero(); }

bool equal_ideals(const Ideal& I, const Ideal& J) {
  const auto& a = I.groebner();
  const auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool contains_ideal(const Ideal& I, const Ideal& J) {
  for (const Poly& g : J.groebner())
    if (!contains(I, g)) return false;
  return true;
}

Ideal sum(const Ideal& I, const Ideal& J) {
  std::vector<Poly> gens = I.gens();
  for (const Poly& g : J.gens()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
  std::vector<Poly> gens;
  for (const Poly& f : I.gens())
    for (const Poly& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

std::string to_string(const Ideal& I) {
  std::string s = "ideal(";
  const auto& gb = I.groebner();
  for (size_t i = 0; i < gb.size(); ++i) {
    if (i) s += ", ";
    s += to_string(gb[i]);
  }
  return s + ")";
}

}  // namespace frobpow
