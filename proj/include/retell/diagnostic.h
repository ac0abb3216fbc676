#pragma once

#include <string>
#include <vector>

namespace retell {

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string location;  // entity, timespan or proposition id, or a node path
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string format_diagnostic(const Diagnostic& d);

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kError) return true;
  }
  return false;
}

}  // namespace retell
