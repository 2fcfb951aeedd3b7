#pragma once

#include <stdexcept>
#include <string>

namespace smce {

enum class ErrorKind {
  Parse,        // malformed input document
  Invariant,    // structurally valid document violating a model rule
  Config,       // bad experiment/CLI configuration
  Io,           // filesystem failure
  Solver,       // iteration/node limit or numerical breakdown
  Internal,     // broken internal assumption
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace smce
