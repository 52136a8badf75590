#include "frobpow/json_io.hpp"

#include <cstdio>

namespace frobpow {

json ideal_json(const Ideal& I) {
  json gens = json::array();
  for (const Poly& g : I.groebner()) gens.push_back(to_string(g));
  return gens;
}

json to_json(const ClosureVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.witness_q) j["witness_q"] = v.witness_q;
  j["emax"] = v.emax;
  if (!v.c_text.empty()) {
    j["c"] = v.c_text;
    j["N"] = v.N;
  }
  j["unconditional"] = v.unconditional;
  json ev = json::array();
  for (const EvidenceRow& r : v.evidence)
    ev.push_back({{"e", r.e}, {"q", r.q}, {"check", r.check}, {"pass", r.pass}});
  j["evidence"] = ev;
  return j;
}

json to_json(const VerificationReport& r) {
  json j;
  j["identity"] = r.identity;
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  json inst = json::array();
  for (const CheckInstance& c : r.instances)
    inst.push_back({{"label", c.label}, {"left", c.left}, {"right", c.right},
                    {"pass", c.pass}});
  j["instances"] = inst;
  j["pass"] = r.pass;
  j["conditional"] = r.conditional;
  j["notes"] = r.notes;
  return j;
}

json to_json(const HKTable& t) {
  json rows = json::array();
  for (const HKRow& r : t.rows)
    rows.push_back({{"e", r.e},
                    {"q", r.q},
                    {"length", r.len},
                    {"ratio_num", r.ratio.num},
                    {"ratio_den", r.ratio.den}});
  return json{{"dim", t.dim}, {"rows", rows}};
}

json to_json(const TightClosureCandidate& c, const Ambient& amb) {
  json entries = json::array();
  for (const CandidateEntry& e : c.entries) {
    json je = to_json(e.verdict);
    je["rep"] = to_string(e.rep, amb);
    entries.push_back(je);
  }
  return json{{"candidate", ideal_json(c.candidate)},
              {"unconditional", c.unconditional},
              {"entries", entries}};
}

json to_json(const TauTruncation& t) {
  json taus = json::array();
  for (const Ideal& I : t.tau) taus.push_back(ideal_json(I));
  json levels = json::array();
  for (const Ideal& I : t.levels) levels.push_back(ideal_json(I));
  return json{{"tau", taus},
              {"levels", levels},
              {"stabilized", t.stabilized},
              {"unconditional", t.unconditional},
              {"notes", t.notes}};
}

json to_json(const TestExponentReport& r) {
  json hits = json::array();
  for (const EvidenceRow& h : r.hits)
    hits.push_back({{"e", h.e}, {"q", h.q}, {"check", h.check}});
  return json{{"empirical_bound", r.empirical_bound},
              {"certified", r.certified},
              {"hits", hits},
              {"notes", r.notes}};
}

std::string render_text(const VerificationReport& r) {
  std::string s = "[" + std::string(r.pass ? "PASS" : "FAIL") + "] " + r.identity;
  if (r.conditional) s += " (conditional)";
  s += "\n";
  for (const auto& [k, v] : r.parameters) s += "  " + k + " = " + v + "\n";
  for (const CheckInstance& c : r.instances) {
    s += std::string("  ") + (c.pass ? "ok  " : "FAIL") + " " + c.label +
         ": " + c.left + (c.pass ? " == " : " != ") + c.right + "\n";
  }
  for (const std::string& n : r.notes) s += "  note: " + n + "\n";
  return s;
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace frobpow
