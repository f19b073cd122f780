#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace slab {

// Typed failure. `code` is a stable machine-readable tag, e.g.
// "invalid-arguments", "unsupported-field", "not-a-factor",
// "degenerate-graph", "not-a-disconnection",
// "degenerate-trajectory", "alphabet-mismatch", "not-sturmian",
// "undetermined-type", "horizon-exhausted", "unknown-builtin".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool ok, const std::string& code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace slab
