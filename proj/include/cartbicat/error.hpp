#pragma once

#include <stdexcept>
#include <string>

namespace cartbicat {

enum class ErrorKind {
  boundary_mismatch,
  adjunction_mismatch,
  not_a_map,
  no_solution,
  non_unique,
  invalid_config,
  parse_error,
  io_error,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::boundary_mismatch: return "boundary-mismatch";
    case ErrorKind::adjunction_mismatch: return "adjunction-mismatch";
    case ErrorKind::not_a_map: return "not-a-map";
    case ErrorKind::no_solution: return "no-solution";
    case ErrorKind::non_unique: return "non-unique";
    case ErrorKind::invalid_config: return "invalid-config";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace cartbicat
