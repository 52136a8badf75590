#include "frobpow/ring.hpp"

#include <cctype>

namespace frobpow {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) { ++i; return true; }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      fail_parse(std::string("expected '") + c + "' (" + what + ") at position " +
                 std::to_string(i));
  }
  [[noreturn]] void fail(const std::string& msg) {
    fail_parse(msg + " at position " + std::to_string(i));
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_ident(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  if (start >= cur.s.size() || !ident_start(cur.s[start])) cur.fail("expected identifier");
  size_t j = start;
  while (j < cur.s.size() && ident_char(cur.s[j])) ++j;
  cur.i = j;
  return cur.s.substr(start, j - start);
}

// Arbitrary-precision literal reduced mod p while reading digits.
uint32_t read_int_mod(Cursor& cur, const PrimeField& F) {
  cur.skip_ws();
  if (cur.i >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
    cur.fail("expected integer literal");
  uint64_t acc = 0;
  uint32_t p = F.characteristic();
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
    acc = (acc * 10 + uint64_t(cur.s[cur.i] - '0')) % p;
    ++cur.i;
  }
  return uint32_t(acc);
}

// Plain machine integer (exponents, characteristic).
int64_t read_plain_int(Cursor& cur) {
  cur.skip_ws();
  if (cur.i >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
    cur.fail("expected integer literal");
  int64_t acc = 0;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
    acc = acc * 10 + (cur.s[cur.i] - '0');
    if (acc > (int64_t(1) << 40)) cur.fail("integer literal too large");
    ++cur.i;
  }
  return acc;
}

// factor := var ['^' int] | int
Term parse_factor(Cursor& cur, const AmbientPtr& amb) {
  const PrimeField& F = amb->field;
  cur.skip_ws();
  if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
    return Term{read_int_mod(cur, F), Monomial::one(amb->nvars())};
  size_t pos = cur.i;
  std::string name = read_ident(cur);
  int v = amb->var_index(name);
  if (v < 0)
    fail_parse("unknown variable '" + name + "' at position " + std::to_string(pos));
  Monomial m = Monomial::one(amb->nvars());
  int64_t e = 1;
  if (cur.accept('^')) {
    e = read_plain_int(cur);
    if (e > INT32_MAX) cur.fail("exponent too large");
  }
  m.exp[v] = int32_t(e);
  return Term{1, std::move(m)};
}

// term := factor ('*' factor)*   (a leading coefficient is just an integer factor)
Term parse_term(Cursor& cur, const AmbientPtr& amb) {
  const PrimeField& F = amb->field;
  Term acc = parse_factor(cur, amb);
  while (cur.accept('*')) {
    Term f = parse_factor(cur, amb);
    acc.coeff = F.mul(acc.coeff, f.coeff);
    acc.mono = acc.mono * f.mono;
  }
  return acc;
}

}  // namespace

Poly parse_poly(const std::string& text, const AmbientPtr& amb) {
  Cursor cur{text};
  const PrimeField& F = amb->field;
  std::vector<Term> terms;
  bool negative = cur.accept('-');
  if (!negative) cur.accept('+');
  for (;;) {
    Term t = parse_term(cur, amb);
    if (negative) t.coeff = F.neg(t.coeff);
    terms.push_back(std::move(t));
    if (cur.eof()) break;
    if (cur.accept('+')) negative = false;
    else if (cur.accept('-')) negative = true;
    else cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
  }
  return Poly(amb, std::move(terms));
}

Poly parse_poly(const std::string& text, const RingPtr& ring) {
  return parse_poly(text, ring->amb);
}

RingPtr make_ring(AmbientPtr amb, std::vector<Poly> relations) {
  for (const Poly& f : relations) {
    if (f.is_zero()) fail_validate("zero polynomial among ring relations");
    if (f.ambient() != amb && !f.ambient()->same_structure(*amb))
      fail_validate("relation does not live in the declared ambient ring");
  }
  auto ring = std::make_shared<RingPresentation>();
  ring->amb = std::move(amb);
  ring->relations = std::move(relations);
  return ring;
}

RingPtr make_ring(uint32_t p, std::vector<std::string> vars,
                  std::vector<std::string> relation_texts, OrderKind order) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) fail_validate("duplicate variable name '" + vars[i] + "'");
  AmbientPtr amb = make_ambient(p, std::move(vars), OrderSpec{order, 0});
  std::vector<Poly> rels;
  rels.reserve(relation_texts.size());
  for (const std::string& t : relation_texts) rels.push_back(parse_poly(t, amb));
  return make_ring(std::move(amb), std::move(rels));
}

RingPtr parse_ring(const std::string& text, OrderKind order) {
  Cursor cur{text};
  std::string kw = read_ident(cur);
  if (kw != "GF") cur.fail("ring literal must start with GF(p)");
  cur.expect('(', "characteristic");
  int64_t p = read_plain_int(cur);
  cur.expect(')', "characteristic");
  cur.expect('[', "variable list");
  std::vector<std::string> vars;
  if (!cur.accept(']')) {
    vars.push_back(read_ident(cur));
    while (cur.accept(',')) vars.push_back(read_ident(cur));
    cur.expect(']', "variable list");
  }
  std::vector<std::string> rel_texts;
  if (cur.accept('/')) {
    cur.expect('(', "relation list");
    // Relations contain no parentheses (grammar has none), so split on commas.
    std::string current;
    int _depth = 1;
    while (true) {
      if (cur.i >= cur.s.size()) cur.fail("unterminated relation list");
      char c = cur.s[cur.i];
      if (c == ')') { --_depth; ++cur.i; if (_depth == 0) break; }
      else if (c == '(') { ++_depth; current += c; ++cur.i; }
      else if (c == ',' && _depth == 1) { rel_texts.push_back(current); current.clear(); ++cur.i; }
      else { current += c; ++cur.i; }
    }
    rel_texts.push_back(current);
  }
  if (!cur.eof()) cur.fail("trailing characters after ring literal");
  if (p < 2 || p >= (int64_t(1) << 31)) cur.fail("characteristic out of range");
  return make_ring(uint32_t(p), std::move(vars), std::move(rel_texts), order);
}

Poly frobenius_pow(const Poly& f, uint64_t q) {
  uint32_t p = f.ambient()->p();
  uint64_t check = 1;
  while (check < q) {
    if (check > (uint64_t(1) << 62) / p)
      fail_resource("frobenius_pow: q exceeds the exponent cap");
    check *= p;
  }
  if (check != q)
    fail_validate("frobenius_pow: " + std::to_string(q) +
                  " is not a power of p = " + std::to_string(p));
  return f.frobenius(q);
}

std::string to_string(const RingPresentation& ring) {
  std::string s = "GF(" + std::to_string(ring.p()) + ")[";
  for (size_t i = 0; i < ring.nvars(); ++i) {
    if (i) s += ",";
    s += ring.amb->vars[i];
  }
  s += "]";
  if (!ring.relations.empty()) {
    s += "/(";
    for (size_t i = 0; i < ring.relations.size(); ++i) {
      if (i) s += ",";
      s += to_string(ring.relations[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace frobpow
