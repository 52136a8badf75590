#include "frobpow/poly.hpp"

#include <algorithm>

#include "frobpow/config.hpp"

namespace frobpow {

Config& config() {
  static Config c;
  return c;
}

int64_t effective_degree_cap(int64_t max_input_degree) {
  const Config& c = config();
  if (c.gb_degree_cap > 0) return c.gb_degree_cap;
  int64_t adaptive = 4 * max_input_degree + 64;
  return adaptive < 64 ? 64 : adaptive;
}

AmbientPtr make_ambient(uint32_t p, std::vector<std::string> vars, OrderSpec order) {
  return std::make_shared<Ambient>(p, std::move(vars), order);
}

Poly::Poly(AmbientPtr amb, std::vector<Term> terms)
    : amb_(std::move(amb)), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  const PrimeField& F = amb_->field;
  for (Term& t : terms_) {
    if (t.mono.nvars() != amb_->nvars())
      fail_validate("monomial arity does not match ambient ring");
    t.coeff %= F.characteristic();
  }
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return amb_->order.greater(a.mono, b.mono);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    else
      out.push_back(t);
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  terms_ = std::move(out);
}

Poly Poly::constant(const AmbientPtr& amb, uint32_t c) {
  c %= amb->p();
  if (c == 0) return Poly(amb);
  Poly f(amb);
  f.terms_.push_back(Term{c, Monomial::one(amb->nvars())});
  return f;
}

Poly Poly::monomial(const AmbientPtr& amb, Monomial m, uint32_t c) {
  return Poly(amb, {Term{c, std::move(m)}});
}

Poly Poly::variable(const AmbientPtr& amb, int index) {
  Monomial m = Monomial::one(amb->nvars());
  m.exp[index] = 1;
  return monomial(amb, std::move(m));
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) fail_validate("leading term of the zero polynomial");
  return terms_.front();
}

int64_t Poly::degree() const {
  int64_t d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int64_t d = terms_[0].mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

void require_same_ambient(const Poly& f, const Poly& g) {
  if (!f.ambient() || !g.ambient())
    fail_validate("operation on a default-constructed polynomial");
  if (f.ambient() != g.ambient() &&
      !f.ambient()->same_structure(*g.ambient()))
    fail_validate("ring mismatch between polynomial operands");
}

Poly Poly::operator+(const Poly& g) const {
  require_same_ambient(*this, g);
  const PrimeField& F = amb_->field;
  const OrderSpec& ord = amb_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = ord.cmp(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      uint32_t s = F.add(terms_[i].coeff, g.terms_[j].coeff);
      if (s) out.push_back(Term{s, terms_[i].mono});
      ++i; ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
  Poly r(amb_);
  r.terms_ = std::move(out);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  const PrimeField& F = amb_->field;
  for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
  return r;
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::scaled(uint32_t c) const {
  const PrimeField& F = amb_->field;
  c %= F.characteristic();
  if (c == 0) return Poly(amb_);
  Poly r = *this;
  for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Poly Poly::times_term(uint32_t c, const Monomial& m) const {
  const PrimeField& F = amb_->field;
  c %= F.characteristic();
  if (c == 0) return Poly(amb_);
  Poly r(amb_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back(Term{F.mul(t.coeff, c), t.mono * m});
  return r;
}

Poly Poly::operator*(const Poly& g) const {
  require_same_ambient(*this, g);
  if (is_zero() || g.is_zero()) return Poly(amb_);
  // Multiply by the shorter operand term by term.
  const Poly& a = terms_.size() <= g.terms_.size() ? *this : g;
  const Poly& b = terms_.size() <= g.terms_.size() ? g : *this;
  Poly acc(amb_);
  for (const Term& t : a.terms_) acc = acc + b.times_term(t.coeff, t.mono);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(amb_->field.inv(leading_coeff()));
}

Poly Poly::pow(uint64_t k) const {
  Poly r = Poly::constant(amb_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

Poly Poly::frobenius(uint64_t q) const {
  // c^q = c in F_p for q = p^e.
  Poly r(amb_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back(Term{t.coeff, t.mono.pow(int64_t(q))});
  // Term order is preserved by raising to a power, but re-sort defensively
  // is unnecessary: m -> m^q is strictly order-preserving for lex/grevlex.
  return r;
}

bool Poly::operator==(const Poly& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != g.terms_[i].coeff || terms_[i].mono != g.terms_[i].mono)
      return false;
  return true;
}

int Poly::cmp(const Poly& f, const Poly& g) {
  size_t n = std::min(f.terms_.size(), g.terms_.size());
  const OrderSpec& ord = f.amb_->order;
  for (size_t i = 0; i < n; ++i) {
    int c = ord.cmp(f.terms_[i].mono, g.terms_[i].mono);
    if (c != 0) return c;
    if (f.terms_[i].coeff != g.terms_[i].coeff)
      return f.terms_[i].coeff < g.terms_[i].coeff ? -1 : 1;
  }
  if (f.terms_.size() != g.terms_.size())
    return f.terms_.size() < g.terms_.size() ? -1 : 1;
  return 0;
}

std::string to_string(const Monomial& m, const Ambient& amb) {
  std::string s;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += amb.vars[i];
    if (m.exp[i] != 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const Ambient& amb = *f.ambient();
  std::string s;
  for (const Term& t : f.terms()) {
    if (!s.empty()) s += "+";
    if (t.mono.is_one()) {
      s += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) s += std::to_string(t.coeff) + "*";
      s += to_string(t.mono, amb);
    }
  }
  return s;
}

}  // namespace frobpow
