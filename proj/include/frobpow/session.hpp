#pragma once

#include <map>
#include <optional>

#include "frobpow/json_io.hpp"

namespace frobpow {

// Declarative input: named rings, ideals and extensions plus an ordered
// task list. Everything is resolved and validated before any computation
// runs; unresolved references are input errors.
struct SessionFile {
  json raw;
  std::string hash;  // fnv1a of the source bytes
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FlatExtension> extensions;
  std::vector<json> tasks;

  static SessionFile load(const std::string& path);
  static SessionFile from_json(const json& j, std::string source_bytes);

  RingPtr ring(const json& task, const char* key = "ring") const;
  Ideal ideal(const json& task, const RingPtr& fallback_ring,
              const char* key = "ideal") const;
  const FlatExtension& extension(const json& task) const;
  TestElementStrategy strategy(const json& task, const RingPtr& ring) const;
  std::vector<Poly> sop(const json& task, const RingPtr& ring,
                        const char* key = "sop") const;
};

struct RunOptions {
  std::optional<std::string> task_filter;  // match name or command
  bool parallel = false;
  bool with_timing = true;
  bool text = false;  // human-readable rendering instead of JSON
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 input error, 2 check failure
  json envelopes = json::array();
  std::string text;
};

// Executes one task; throws Error on input problems. ok=false envelopes
// mark check failures.
json run_task(const SessionFile& session, const json& task, bool with_timing);

RunResult run_session(const SessionFile& session, const RunOptions& opts);

extern const char* const kToolVersion;
extern const char* const kSchemaVersion;

}  // namespace frobpow
