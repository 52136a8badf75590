#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frobpow {

// Per-identity verification record: named instances with both computed
// sides, an overall verdict, and explicit conditionality notes for
// closure-based evidence.
struct CheckInstance {
  std::string label;
  std::string left;
  std::string right;
  bool pass = false;
};

struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckInstance> instances;
  bool pass = true;
  bool conditional = false;
  std::vector<std::string> notes;

  void add(std::string label, std::string left, std::string right, bool ok) {
    instances.push_back({std::move(label), std::move(left), std::move(right), ok});
    pass = pass && ok;
  }
  void param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  void note(std::string n) { notes.push_back(std::move(n)); }
};

}  // namespace frobpow
