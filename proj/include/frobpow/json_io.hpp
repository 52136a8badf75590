#pragma once

#include <json.hpp>

#include "frobpow/basechange.hpp"
#include "frobpow/hilbert.hpp"

namespace frobpow {

using json = nlohmann::ordered_json;

json to_json(const ClosureVerdict& v);
json to_json(const VerificationReport& r);
json to_json(const HKTable& t);
json to_json(const TightClosureCandidate& c, const Ambient& amb);
json to_json(const TauTruncation& t);
json to_json(const TestExponentReport& r);
json ideal_json(const Ideal& I);

std::string render_text(const VerificationReport& r);

// FNV-1a over the raw bytes; used to stamp reports with their session.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace frobpow
