#pragma once

#include <stdexcept>
#include <string>

namespace catlim {

// Every failure the engine can signal, in one enum so the C API can map
// exceptions to stable error codes.
enum class Errc {
  invalid_argument,
  malformed_diagram,
  type_mismatch,
  mismatched_endpoints,
  budget_exceeded,
  bound_exceeded,
  no_factorization,
  oversized_node,
  parse_error,
  validation_error,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace catlim
