#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hllab {

enum class ErrorKind {
  Domain,        // argument outside the admissible set of an operation
  Regime,        // instance in the wrong Σ1/p regime for a theorem
  Precondition,  // other unmet precondition (index range, k0 existence, ...)
  NotApplicable, // a necessary condition that is only proven elsewhere
  Parameter,     // inconsistent (r, q) or experiment parameters
  Dimension,     // tensor / vector shape mismatch
  Infeasible,    // enumeration oracle over budget or unsupported ball
  Format,        // malformed input text / JSON
  Overflow,      // exact value does not fit the serialized integer width
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hllab
