#include <algorithm>
#include <functional>

#include "frobpow/config.hpp"
#include "frobpow/hilbert.hpp"
#include "frobpow/ideal.hpp"

namespace frobpow {

namespace {

// Exact division f / g in the ambient polynomial ring; caller guarantees
// g | f (used on generators of I cap (g)).
Poly exact_divide(const Poly& f, const Poly& g) {
  const AmbientPtr& amb = f.ambient();
  const PrimeField& F = amb->field;
  Poly h = f;
  std::vector<Term> quotient;
  while (!h.is_zero()) {
    const Term& lt = h.leading_term();
    if (!g.leading_monomial().divides(lt.mono))
      fail_validate("exact_divide: division is not exact");
    uint32_t c = F.mul(lt.coeff, F.inv(g.leading_coeff()));
    Monomial m = lt.mono / g.leading_monomial();
    quotient.push_back(Term{c, m});
    h = h - g.times_term(c, m);
  }
  return Poly(amb, std::move(quotient));
}

// Ambient with one auxiliary elimination variable in front of the ring's
// variables; the order eliminates that variable.
AmbientPtr elimination_ambient(const AmbientPtr& amb) {
  std::vector<std::string> vars;
  vars.reserve(amb->nvars() + 1);
  vars.push_back("@t");
  for (const auto& v : amb->vars) vars.push_back(v);
  return make_ambient(amb->p(), std::move(vars), OrderSpec{amb->order.kind, 1});
}

Poly lift_to_elim(const Poly& f, const AmbientPtr& eamb) {
  std::vector<Term> ts;
  ts.reserve(f.nterms());
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(eamb->nvars());
    for (size_t i = 0; i < t.mono.nvars(); ++i) m.exp[i + 1] = t.mono.exp[i];
    ts.push_back(Term{t.coeff, std::move(m)});
  }
  return Poly(eamb, std::move(ts));
}

Poly drop_elim_var(const Poly& f, const AmbientPtr& amb) {
  std::vector<Term> ts;
  ts.reserve(f.nterms());
  for (const Term& t : f.terms()) {
    Monomial m = Monomial::one(amb->nvars());
    for (size_t i = 0; i < amb->nvars(); ++i) m.exp[i] = t.mono.exp[i + 1];
    ts.push_back(Term{t.coeff, std::move(m)});
  }
  return Poly(amb, std::move(ts));
}

// Generators of the intersection of two ambient ideals (relations already
// folded in by the caller).
std::vector<Poly> intersect_ambient(const AmbientPtr& amb, const std::vector<Poly>& a,
                                    const std::vector<Poly>& b) {
  AmbientPtr eamb = elimination_ambient(amb);
  Poly t = Poly::variable(eamb, 0);
  Poly one_minus_t = Poly::constant(eamb, 1) - t;
  std::vector<Poly> gens;
  for (const Poly& f : a) gens.push_back(t * lift_to_elim(f, eamb));
  for (const Poly& g : b) gens.push_back(one_minus_t * lift_to_elim(g, eamb));
  std::vector<Poly> gb = buchberger(eamb, gens);
  std::vector<Poly> out;
  for (const Poly& g : gb) {
    bool uses_t = false;
    for (const Term& tm : g.terms())
      if (tm.mono.exp[0] != 0) { uses_t = true; break; }
    if (!uses_t) out.push_back(drop_elim_var(g, amb));
  }
  return out;
}

std::vector<Poly> lifted_gens(const Ideal& I) {
  std::vector<Poly> gens = I.gens();
  for (const Poly& r : I.ring()->relations) gens.push_back(r);
  return gens;
}

std::vector<Monomial> minimal_leading_terms(const std::vector<Poly>& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.size());
  for (const Poly& g : gb) lts.push_back(g.leading_monomial());
  return lts;
}

}  // namespace

Ideal colon(const Ideal& I, const Poly& f) {
  const RingPtr& ring = I.ring();
  Poly fn = normal_form(f, Ideal(ring, {}));
  if (fn.is_zero()) return Ideal::unit(ring);  // colon by zero: whole ring
  // (I : f) in A equals the ambient colon of the lifted ideal: compute
  // (lift cap (f)) and divide each generator by f.
  std::vector<Poly> inter = intersect_ambient(ring->amb, lifted_gens(I), {fn});
  std::vector<Poly> gens;
  gens.reserve(inter.size());
  for (const Poly& h : inter) gens.push_back(exact_divide(h, fn));
  return Ideal(ring, std::move(gens));
}

Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  const RingPtr& ring = I.ring();
  bool first = true;
  Ideal acc;
  for (const Poly& g : J.gens()) {
    Poly gn = normal_form(g, Ideal(ring, {}));
    if (gn.is_zero()) continue;
    Ideal c = colon(I, gn);
    acc = first ? c : intersect(acc, c);
    first = false;
  }
  if (first) return Ideal::unit(ring);  // J = (0): (I : 0) = (1)
  return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring() && !I.ring()->amb->same_structure(*J.ring()->amb))
    fail_validate("intersect: ring mismatch");
  std::vector<Poly> gens =
      intersect_ambient(I.ring()->amb, lifted_gens(I), lifted_gens(J));
  return Ideal(I.ring(), std::move(gens));
}

StandardMonomialBasis standard_monomials(const Ideal& I, int64_t cap) {
  if (cap <= 0) cap = config().monomial_cap;
  const AmbientPtr& amb = I.ring()->amb;
  size_t n = amb->nvars();
  std::vector<Monomial> lts = minimal_leading_terms(I.groebner());

  StandardMonomialBasis basis;
  // Pure-power bound per variable; absence of one means infinite dimension.
  std::vector<int64_t> bound(n, -1);
  for (const Monomial& m : lts) {
    int support = -1;
    bool pure = true;
    for (size_t i = 0; i < n; ++i) {
      if (m.exp[i] == 0) continue;
      if (support >= 0) { pure = false; break; }
      support = int(i);
    }
    if (!pure) continue;
    if (support < 0) {  // LT ideal contains 1: unit ideal, empty basis
      basis.finite = true;
      return basis;
    }
    if (bound[support] < 0 || m.exp[support] < bound[support])
      bound[support] = m.exp[support];
  }
  for (size_t i = 0; i < n; ++i)
    if (bound[i] < 0) return basis;  // infinite marker: finite == false

  int64_t box = 1;
  for (size_t i = 0; i < n; ++i) {
    box *= bound[i];
    if (box > cap)
      fail_resource("standard monomial enumeration exceeds cap (" +
                    std::to_string(cap) + ")");
  }

  std::vector<Monomial> result;
  Monomial cur = Monomial::one(n);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == n) {
      for (const Monomial& m : lts)
        if (m.divides(cur)) return;
      result.push_back(cur);
      return;
    }
    for (int64_t e = 0; e < bound[i]; ++e) {
      cur.exp[i] = int32_t(e);
      rec(i + 1);
    }
    cur.exp[i] = 0;
  };
  rec(0);

  std::sort(result.begin(), result.end(), [&](const Monomial& a, const Monomial& b) {
    return amb->order.less(a, b);
  });
  basis.finite = true;
  basis.monomials = std::move(result);
  return basis;
}

int64_t length(const Ideal& I) {
  int64_t n = count_standard_monomials(I.ring()->nvars(),
                                       minimal_leading_terms(I.groebner()));
  if (n < 0) fail_validate("length: ideal is not zero-dimensional");
  return n;
}

bool is_zero_dimensional(const Ideal& I) {
  return count_standard_monomials(I.ring()->nvars(),
                                  minimal_leading_terms(I.groebner())) >= 0;
}

bool is_m_primary(const Ideal& I) {
  return is_zero_dimensional(I) && !I.is_unit_ideal();
}

int krull_dim(const Ideal& I) {
  const AmbientPtr& amb = I.ring()->amb;
  size_t n = amb->nvars();
  std::vector<Monomial> lts = minimal_leading_terms(I.groebner());
  for (const Monomial& m : lts)
    if (m.is_one()) return -1;  // unit ideal sentinel
  if (n > 24) fail_resource("krull_dim: too many variables for subset search");
  // A variable subset is independent iff no leading term is supported
  // inside it; dim = size of the largest independent subset.
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& m : lts) {
      bool inside = true;
      for (size_t i = 0; i < n; ++i)
        if (m.exp[i] != 0 && !(mask & (uint32_t(1) << i))) { inside = false; break; }
      if (inside) { independent = false; break; }
    }
    if (independent) best = size;
  }
  return best;
}

int krull_dim(const RingPtr& ring) { return krull_dim(Ideal(ring, {})); }

std::vector<Poly> socle(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const AmbientPtr& amb = ring->amb;
  const PrimeField& F = amb->field;
  StandardMonomialBasis basis = standard_monomials(I);
  if (!basis.finite || I.is_unit_ideal())
    fail_validate("socle: ideal is not m-primary");
  size_t nb = basis.monomials.size();
  size_t n = amb->nvars();

  std::vector<size_t> index_of;  // dense lookup via sorted search
  auto find_index = [&](const Monomial& m) -> size_t {
    auto it = std::lower_bound(basis.monomials.begin(), basis.monomials.end(), m,
                               [&](const Monomial& a, const Monomial& b) {
                                 return amb->order.less(a, b);
                               });
    return size_t(it - basis.monomials.begin());
  };

  // Rows of the multiplication constraints: socle vectors v satisfy
  // x_i * v = 0 in A/I for every variable.
  std::vector<std::vector<uint32_t>> rows;
  for (size_t vi = 0; vi < n; ++vi) {
    // Build matrix of x_vi * b_j expressed over the standard basis.
    std::vector<std::vector<uint32_t>> mat(nb, std::vector<uint32_t>(nb, 0));
    for (size_t j = 0; j < nb; ++j) {
      Monomial m = basis.monomials[j];
      m.exp[vi] += 1;
      Poly nf = normal_form(Poly::monomial(amb, m), I);
      for (const Term& t : nf.terms()) {
        size_t k = find_index(t.mono);
        mat[k][j] = t.coeff;
      }
    }
    for (size_t k = 0; k < nb; ++k) rows.push_back(std::move(mat[k]));
  }

  // Gaussian elimination to reduced row echelon form over F_p.
  size_t ncols = nb;
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    uint32_t inv = F.inv(rows[rank][col]);
    for (size_t c = col; c < ncols; ++c) rows[rank][c] = F.mul(rows[rank][c], inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      uint32_t factor = rows[r][col];
      for (size_t c = col; c < ncols; ++c)
        rows[r][c] = F.sub(rows[r][c], F.mul(factor, rows[rank][c]));
    }
    pivot_col.push_back(int(col));
    ++rank;
  }

  // Kernel basis: one vector per free column, in ascending column order.
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[size_t(c)] = true;
  std::vector<Poly> result;
  for (size_t free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Term> terms;
    terms.push_back(Term{1, basis.monomials[free_col]});
    for (size_t r = 0; r < rank; ++r) {
      uint32_t coeff = rows[r][free_col];
      if (coeff)
        terms.push_back(Term{F.neg(coeff), basis.monomials[size_t(pivot_col[r])]});
    }
    result.push_back(Poly(amb, std::move(terms)));
  }
  return result;
}

bool is_irreducible(const Ideal& I) { return socle(I).size() == 1; }

bool is_parameter_ideal(const Ideal& I) {
  const RingPtr& ring = I.ring();
  Ideal zero_ideal(ring, {});
  size_t n = 0;
  for (const Poly& g : I.gens())
    if (!normal_form(g, zero_ideal).is_zero()) ++n;
  int dim_a = krull_dim(ring);
  int dim_quot = krull_dim(I);
  if (dim_quot < 0) return false;  // unit ideal
  int height = dim_a - dim_quot;
  return height >= int(n);
}

bool is_regular_sequence(const RingPtr& ring, const std::vector<Poly>& z) {
  for (size_t i = 0; i < z.size(); ++i) {
    std::vector<Poly> prefix(z.begin(), z.begin() + i);
    Ideal P(ring, prefix);
    if (contains(P, z[i])) return false;
    Ideal c = colon(P, z[i]);
    if (!equal_ideals(c, P)) return false;
  }
  return true;
}

}  // namespace frobpow
