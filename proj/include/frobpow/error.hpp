#pragma once

#include <stdexcept>
#include <string>

namespace frobpow {

// Every thrown error carries a diagnostic class so the CLI can map it to a
// stable code and exit status (input errors -> 1, check failures -> 2).
class Error : public std::runtime_error {
public:
  enum class Kind { io, parse, validate, resource, internal };

  Error(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const { return kind_; }

  const char* code() const {
    switch (kind_) {
      case Kind::io: return "E_IO";
      case Kind::parse: return "E_PARSE";
      case Kind::validate: return "E_VALIDATE";
      case Kind::resource: return "E_RESOURCE";
      case Kind::internal: return "E_INTERNAL";
    }
    return "E_INTERNAL";
  }

private:
  Kind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) {
  throw Error(Error::Kind::parse, msg);
}
[[noreturn]] inline void fail_validate(const std::string& msg) {
  throw Error(Error::Kind::validate, msg);
}
[[noreturn]] inline void fail_resource(const std::string& msg) {
  throw Error(Error::Kind::resource, msg);
}

}  // namespace frobpow
