#include "frobpow/session.hpp"

#include <chrono>
#include <functional>
#include <fstream>
#include <future>
#include <sstream>

#include "frobpow/config.hpp"

namespace frobpow {

const char* const kToolVersion = "0.1.0";
const char* const kSchemaVersion = "1";

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') { out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  out.push_back(cur);
  return out;
}

RingPtr ring_from_spec(const json& spec) {
  if (spec.is_string()) return parse_ring(spec.get<std::string>());
  if (!spec.is_object()) fail_validate("ring spec must be a string or object");
  uint32_t p = spec.at("p").get<uint32_t>();
  std::vector<std::string> vars = spec.at("vars").get<std::vector<std::string>>();
  std::vector<std::string> rels;
  if (spec.contains("relations"))
    rels = spec.at("relations").get<std::vector<std::string>>();
  OrderKind order = OrderKind::grevlex;
  if (spec.contains("order")) {
    std::string o = spec.at("order").get<std::string>();
    if (o == "lex") order = OrderKind::lex;
    else if (o == "grevlex") order = OrderKind::grevlex;
    else fail_validate("unknown monomial order '" + o + "'");
  }
  return make_ring(p, std::move(vars), std::move(rels), order);
}

int get_int(const json& task, const char* key, int fallback) {
  if (!task.contains(key)) return fallback;
  return task.at(key).get<int>();
}

}  // namespace

SessionFile SessionFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::io, "cannot open session file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  json j;
  try {
    j = json::parse(bytes);
  } catch (const std::exception& ex) {
    fail_parse("session file is not valid JSON: " + std::string(ex.what()));
  }
  return from_json(j, bytes);
}

SessionFile SessionFile::from_json(const json& j, std::string source_bytes) {
  SessionFile s;
  s.raw = j;
  s.hash = fnv1a_hex(source_bytes);

  if (j.contains("rings"))
    for (const auto& [name, spec] : j.at("rings").items())
      s.rings.emplace(name, ring_from_spec(spec));

  if (j.contains("ideals")) {
    for (const auto& [name, spec] : j.at("ideals").items()) {
      if (!spec.is_object() || !spec.contains("ring") || !spec.contains("gens"))
        fail_validate("ideal '" + name + "' needs {ring, gens}");
      std::string rname = spec.at("ring").get<std::string>();
      auto it = s.rings.find(rname);
      if (it == s.rings.end())
        fail_validate("unresolved reference: ring '" + rname + "' in ideal '" +
                      name + "'");
      std::vector<Poly> gens;
      for (const auto& g : spec.at("gens"))
        gens.push_back(parse_poly(g.get<std::string>(), it->second));
      s.ideals.emplace(name, Ideal(it->second, std::move(gens)));
    }
  }

  if (j.contains("extensions")) {
    for (const auto& [name, spec] : j.at("extensions").items()) {
      std::string base = spec.at("base").get<std::string>();
      std::string fib = spec.at("fiber").get<std::string>();
      auto bi = s.rings.find(base);
      auto fi = s.rings.find(fib);
      if (bi == s.rings.end())
        fail_validate("unresolved reference: ring '" + base + "' in extension '" +
                      name + "'");
      if (fi == s.rings.end())
        fail_validate("unresolved reference: ring '" + fib + "' in extension '" +
                      name + "'");
      FiberPresentation fiber;
      fiber.T = fi->second;
      if (spec.contains("z"))
        for (const auto& z : spec.at("z"))
          fiber.z.push_back(parse_poly(z.get<std::string>(), fi->second));
      s.extensions.emplace(name, build_extension(bi->second, fiber));
    }
  }

  if (j.contains("tasks")) {
    int index = 0;
    for (const auto& t : j.at("tasks")) {
      if (!t.is_object() || !t.contains("command"))
        fail_validate("task #" + std::to_string(index) + " needs a command");
      json task = t;
      if (!task.contains("name"))
        task["name"] = task.at("command").get<std::string>() + "-" + std::to_string(index);
      s.tasks.push_back(task);
      ++index;
    }
  }
  return s;
}

RingPtr SessionFile::ring(const json& task, const char* key) const {
  if (!task.contains(key)) fail_validate(std::string("task needs '") + key + "'");
  std::string spec = task.at(key).get<std::string>();
  auto it = rings.find(spec);
  if (it != rings.end()) return it->second;
  // "<extension>.S" names the total ring of a declared extension, so
  // F-rationality/F-injectivity evidence can run on S directly.
  if (spec.size() > 2 && spec.rfind(".S") == spec.size() - 2) {
    auto ext = extensions.find(spec.substr(0, spec.size() - 2));
    if (ext != extensions.end()) return ext->second.S;
  }
  if (spec.rfind("GF", 0) == 0) return parse_ring(spec);
  fail_validate("unresolved reference: ring '" + spec + "'");
}

Ideal SessionFile::ideal(const json& task, const RingPtr& fallback_ring,
                         const char* key) const {
  if (!task.contains(key)) fail_validate(std::string("task needs '") + key + "'");
  const json& spec = task.at(key);
  if (spec.is_object()) {
    RingPtr r = fallback_ring;
    if (spec.contains("ring")) r = ring(spec);
    std::vector<Poly> gens;
    for (const auto& g : spec.at("gens")) gens.push_back(parse_poly(g.get<std::string>(), r));
    return Ideal(r, std::move(gens));
  }
  std::string text = spec.get<std::string>();
  auto it = ideals.find(text);
  if (it != ideals.end()) {
    if (fallback_ring && task.contains("ring") &&
        !it->second.ring()->amb->same_structure(*fallback_ring->amb))
      fail_validate("ideal '" + text + "' lives in a different ring than the "
                    "task's 'ring'");
    return it->second;
  }
  if (!fallback_ring)
    fail_validate("unresolved reference: ideal '" + text + "'");
  std::vector<Poly> gens;
  for (const std::string& g : split_commas(text))
    gens.push_back(parse_poly(g, fallback_ring));
  return Ideal(fallback_ring, std::move(gens));
}

const FlatExtension& SessionFile::extension(const json& task) const {
  if (!task.contains("extension")) fail_validate("task needs 'extension'");
  std::string name = task.at("extension").get<std::string>();
  auto it = extensions.find(name);
  if (it == extensions.end())
    fail_validate("unresolved reference: extension '" + name + "'");
  return it->second;
}

TestElementStrategy SessionFile::strategy(const json& task, const RingPtr& r) const {
  int power = get_int(task, "test_power", 2);
  if (!task.contains("test_element")) {
    // Safe default: unconditional in regular rings, jacobian otherwise.
    if (r->is_regular_presentation()) return TestElementStrategy::unit();
    return TestElementStrategy::jacobian(power);
  }
  std::string spec = task.at("test_element").get<std::string>();
  if (spec == "unit") return TestElementStrategy::unit();
  if (spec == "jacobian") return TestElementStrategy::jacobian(power);
  return TestElementStrategy::explicit_elem(parse_poly(spec, r), power);
}

std::vector<Poly> SessionFile::sop(const json& task, const RingPtr& r,
                                   const char* key) const {
  if (!task.contains(key)) fail_validate(std::string("task needs '") + key + "'");
  std::vector<Poly> z;
  const json& spec = task.at(key);
  if (spec.is_array()) {
    for (const auto& s : spec) z.push_back(parse_poly(s.get<std::string>(), r));
  } else {
    for (const std::string& s : split_commas(spec.get<std::string>()))
      if (!s.empty()) z.push_back(parse_poly(s, r));
  }
  return z;
}

namespace {

json execute(const SessionFile& S, const json& task, bool& ok, bool& conditional) {
  std::string cmd = task.at("command").get<std::string>();
  int emax = get_int(task, "emax", 3);
  int tmax = get_int(task, "tmax", 3);
  int e_min = get_int(task, "e_min", 1);
  int e_max = get_int(task, "e_max", emax);

  auto report_result = [&](const VerificationReport& rep) {
    ok = rep.pass;
    conditional = rep.conditional;
    return to_json(rep);
  };

  if (cmd == "gb") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    return json{{"ring", to_string(*r)}, {"groebner", ideal_json(I)}};
  }
  if (cmd == "nf" || cmd == "member") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    Poly f = parse_poly(task.at("elem").get<std::string>(), r);
    Poly nf = normal_form(f, I);
    json out{{"elem", to_string(f)}, {"normal_form", to_string(nf)},
             {"member", nf.is_zero()}};
    return out;
  }
  if (cmd == "fpower") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    uint64_t q;
    if (task.contains("q")) q = task.at("q").get<uint64_t>();
    else q = FrobeniusExponent::make(r->p(), get_int(task, "e", 1)).q;
    Ideal Iq = frobenius_power(I, q);
    return json{{"q", q}, {"groebner", ideal_json(Iq)}};
  }
  if (cmd == "fclosure") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    Poly u = parse_poly(task.at("elem").get<std::string>(), r);
    ClosureVerdict v = frobenius_closure_test(u, I, emax);
    conditional = !v.unconditional;
    return to_json(v);
  }
  if (cmd == "tclosure") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    TestElementStrategy strat = S.strategy(task, r);
    if (task.contains("elem")) {
      Poly u = parse_poly(task.at("elem").get<std::string>(), r);
      std::optional<TestExponentCertificate> cert;
      if (task.contains("cert")) {
        const json& cj = task.at("cert");
        if (cj.is_string() && cj.get<std::string>() == "regular") {
          cert = regular_ring_certificate(r);
        } else if (cj.is_object()) {
          TestExponentCertificate tc;
          tc.c = parse_poly(cj.at("c").get<std::string>(), r);
          tc.Q = cj.at("Q").get<uint64_t>();
          tc.provenance = TestExponentCertificate::Provenance::user_asserted;
          cert = tc;
        } else {
          fail_validate("cert must be 'regular' or {c, Q}");
        }
      }
      ClosureVerdict v = tight_closure_test(u, I, strat, cert, emax);
      conditional = !v.unconditional;
      return to_json(v);
    }
    TightClosureCandidate c = tight_closure_candidate(I, strat, emax);
    conditional = !c.unconditional;
    return to_json(c, *r->amb);
  }
  if (cmd == "hk") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    HKTable t = hilbert_kunz(I, emax);
    json out = to_json(t);
    // No extrapolation: the table is the result, the last ratio is only a
    // convenience echo.
    if (!t.rows.empty()) out["last_ratio"] = t.rows.back().ratio.str();
    out["csv"] = t.csv();
    return out;
  }
  if (cmd == "tau") {
    RingPtr r = S.ring(task);
    TauTruncation t =
        tau_truncated(r, S.sop(task, r), tmax, S.strategy(task, r), emax);
    conditional = !t.unconditional;
    return to_json(t);
  }
  if (cmd == "socle") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    std::vector<Poly> soc = socle(I);
    json basis = json::array();
    for (const Poly& f : soc) basis.push_back(to_string(f));
    return json{{"socle", basis}, {"irreducible", soc.size() == 1}};
  }
  if (cmd == "dim") {
    RingPtr r = S.ring(task);
    if (task.contains("ideal")) {
      Ideal I = S.ideal(task, r);
      return json{{"dim", krull_dim(I)}};
    }
    return json{{"dim", krull_dim(r)}};
  }
  if (cmd == "hilbert") {
    RingPtr r = S.ring(task);
    Ideal I = task.contains("ideal") ? S.ideal(task, r) : Ideal(r, {});
    HilbertSeries h = hilbert_series(I);
    return json{{"series", h.str()}, {"multiplicity", h.at_one()}};
  }
  if (cmd == "verify-prop5.7") {
    const FlatExtension& X = S.extension(task);
    Ideal I = S.ideal(task, X.R);
    VerificationReport lrep = check_length_identity(X, I, e_min, e_max);
    VerificationReport mrep = check_hk_multiplicativity(X, I, e_min, e_max);
    ok = lrep.pass && mrep.pass;
    conditional = lrep.conditional || mrep.conditional;
    return json{{"length_identity", to_json(lrep)},
                {"hk_multiplicativity", to_json(mrep)}};
  }
  if (cmd == "verify-cor5.8") {
    const FlatExtension& X = S.extension(task);
    return report_result(check_kunz_inequality(X, e_min, e_max));
  }
  if (cmd == "verify-thm4.1") {
    const FlatExtension& X = S.extension(task);
    Ideal I = S.ideal(task, X.R);
    int64_t t = get_int(task, "t", 1);
    if (task.value("bracket", false))
      FrobeniusExponent::from_q(X.R->p(), uint64_t(t));  // insist t = p^e
    return report_result(
        check_tightly_closed_extension(X, I, t, S.strategy(task, X.R), emax));
  }
  if (cmd == "verify-thm5.1") {
    RingPtr r = S.ring(task);
    Ideal I = S.ideal(task, r);
    Ideal T = S.ideal(task, r, "T");
    return report_result(strong_test_ideal_check(T, I, S.strategy(task, r), emax));
  }
  if (cmd == "verify-prop5.9") {
    const FlatExtension& X = S.extension(task);
    Ideal I = S.ideal(task, X.R);
    Poly c = parse_poly(task.at("elem").get<std::string>(), X.R);
    return report_result(
        check_test_exponent_transfer(X, c, I, S.strategy(task, X.R), emax));
  }
  if (cmd == "verify-prop4.4") {
    const FlatExtension& X = S.extension(task);
    return report_result(check_tau_extension(X, S.sop(task, X.R), tmax,
                                             S.strategy(task, X.R), emax));
  }
  if (cmd == "verify-finj") {
    RingPtr r = S.ring(task);
    return report_result(f_injectivity_check(r, S.sop(task, r), emax));
  }
  if (cmd == "verify-frat") {
    RingPtr r = S.ring(task);
    return report_result(
        f_rationality_check(r, S.sop(task, r), S.strategy(task, r), emax));
  }
  fail_validate("unknown command '" + cmd + "'");
}

}  // namespace

json run_task(const SessionFile& session, const json& task, bool with_timing) {
  json envelope;
  envelope["schema_version"] = kSchemaVersion;
  envelope["tool_version"] = kToolVersion;
  envelope["session_hash"] = session.hash;
  envelope["name"] = task.value("name", "");
  envelope["command"] = task.at("command").get<std::string>();
  envelope["task"] = task;

  auto start = std::chrono::steady_clock::now();
  bool ok = true, conditional = false;
  json result = execute(session, task, ok, conditional);

  // Envelope-level evidence: per-q membership rows for closure verdicts,
  // per-instance records for verification reports.
  json evidence = json::array();
  std::function<void(const json&)> collect = [&](const json& node) {
    if (!node.is_object()) return;
    if (node.contains("evidence") && node.at("evidence").is_array())
      for (const auto& row : node.at("evidence")) evidence.push_back(row);
    if (node.contains("instances") && node.at("instances").is_array())
      for (const auto& inst : node.at("instances"))
        evidence.push_back({{"check", inst.value("label", "")},
                            {"pass", inst.value("pass", false)}});
    for (const auto& [key, value] : node.items()) {
      if (key == "evidence" || key == "instances" || key == "entries") continue;
      collect(value);
    }
  };
  collect(result);

  envelope["result"] = std::move(result);
  envelope["evidence"] = std::move(evidence);
  envelope["ok"] = ok;
  envelope["conditional"] = conditional;
  if (with_timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    envelope["timing_ms"] = ms;
  }
  return envelope;
}

RunResult run_session(const SessionFile& session, const RunOptions& opts) {
  RunResult rr;
  std::vector<json> selected;
  for (const json& t : session.tasks) {
    if (opts.task_filter) {
      std::string name = t.value("name", "");
      std::string cmd = t.at("command").get<std::string>();
      if (name != *opts.task_filter && cmd != *opts.task_filter) continue;
    }
    selected.push_back(t);
  }
  if (opts.task_filter && selected.empty())
    fail_validate("task filter '" + *opts.task_filter + "' matches nothing");

  std::vector<json> envelopes(selected.size());
  if (opts.parallel) {
    std::vector<std::future<json>> futures;
    futures.reserve(selected.size());
    for (const json& t : selected)
      futures.push_back(std::async(std::launch::async, [&session, t, &opts] {
        return run_task(session, t, opts.with_timing);
      }));
    for (size_t i = 0; i < futures.size(); ++i) envelopes[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < selected.size(); ++i)
      envelopes[i] = run_task(session, selected[i], opts.with_timing);
  }

  bool any_fail = false;
  for (json& e : envelopes) {
    if (!e.at("ok").get<bool>()) any_fail = true;
    rr.envelopes.push_back(std::move(e));
  }
  rr.exit_code = any_fail ? 2 : 0;

  if (opts.text) {
    std::string s;
    for (const json& e : rr.envelopes) {
      s += "== " + e.at("name").get<std::string>() + " (" +
           e.at("command").get<std::string>() + "): " +
           (e.at("ok").get<bool>() ? "pass" : "FAIL");
      if (e.at("conditional").get<bool>()) s += " [conditional]";
      s += "\n";
    }
    rr.text = s;
  }
  return rr;
}

}  // namespace frobpow
