#pragma once

// Test-only oracles, independent of the Groebner path they check.

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "frobpow/ideal.hpp"

namespace frobpow::testing {

inline std::vector<Monomial> monomials_up_to(size_t nvars, int64_t deg) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(nvars);
  std::function<void(size_t, int64_t)> rec = [&](size_t i, int64_t left) {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (int64_t e = 0; e <= left; ++e) {
      cur.exp[i] = int32_t(e);
      rec(i + 1, left - e);
    }
    cur.exp[i] = 0;
  };
  rec(0, deg);
  return out;
}

// Membership by linear algebra: is f a combination sum h_i g_i with
// deg(h_i g_i) <= deg f + slack? Complete for homogeneous data at slack 0;
// the slack absorbs cancellation in small inhomogeneous instances.
inline bool brute_force_member(const Poly& f, const std::vector<Poly>& gens,
                               int64_t slack) {
  const AmbientPtr& amb = f.ambient();
  const PrimeField& F = amb->field;
  if (f.is_zero()) return true;
  int64_t bound = f.degree() + slack;

  std::vector<Monomial> all = monomials_up_to(amb->nvars(), bound);
  std::map<std::vector<int32_t>, size_t> index;
  for (size_t i = 0; i < all.size(); ++i) index[all[i].exp] = i;

  std::vector<std::vector<uint32_t>> cols;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    for (const Monomial& m : all) {
      if (m.degree() + g.degree() > bound) continue;
      std::vector<uint32_t> col(all.size(), 0);
      for (const Term& t : g.terms())
        col[index.at((t.mono * m).exp)] = t.coeff;
      cols.push_back(std::move(col));
    }
  }
  std::vector<uint32_t> target(all.size(), 0);
  for (const Term& t : f.terms()) target[index.at(t.mono.exp)] = t.coeff;

  // Gaussian elimination on the column space, reducing the target alongside.
  size_t nrows = all.size();
  std::vector<std::vector<uint32_t>> basis;  // echelon columns
  std::vector<size_t> pivots;
  auto reduce = [&](std::vector<uint32_t>& v) {
    for (size_t b = 0; b < basis.size(); ++b) {
      uint32_t c = v[pivots[b]];
      if (c == 0) continue;
      for (size_t r = 0; r < nrows; ++r)
        v[r] = F.sub(v[r], F.mul(c, basis[b][r]));
    }
  };
  for (auto& col : cols) {
    reduce(col);
    size_t piv = nrows;
    for (size_t r = 0; r < nrows; ++r)
      if (col[r]) { piv = r; break; }
    if (piv == nrows) continue;
    uint32_t inv = F.inv(col[piv]);
    for (size_t r = 0; r < nrows; ++r) col[r] = F.mul(col[r], inv);
    basis.push_back(std::move(col));
    pivots.push_back(piv);
  }
  reduce(target);
  for (uint32_t v : target)
    if (v) return false;
  return true;
}

// Deterministic random polynomials for property tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}

  int64_t pick(int64_t lo, int64_t hi) {
    return lo + int64_t(gen() % uint64_t(hi - lo + 1));
  }

  Poly poly(const AmbientPtr& amb, int max_terms, int max_deg, bool allow_zero = true) {
    std::vector<Term> ts;
    int nterms = int(pick(allow_zero ? 0 : 1, max_terms));
    for (int t = 0; t < nterms; ++t) {
      Monomial m = Monomial::one(amb->nvars());
      int64_t left = max_deg;
      for (size_t i = 0; i < amb->nvars(); ++i) {
        int64_t e = pick(0, left);
        m.exp[i] = int32_t(e);
        left -= e;
      }
      uint32_t c = uint32_t(pick(1, amb->p() - 1));
      ts.push_back(Term{c, std::move(m)});
    }
    return Poly(amb, std::move(ts));
  }
};

}  // namespace frobpow::testing
