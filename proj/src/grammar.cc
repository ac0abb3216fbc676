#include "retell/grammar.h"

#include "retell/diagnostic.h"
#include "retell/error.h"

namespace retell {

std::string_view to_string(Number v) { return v == Number::kSingular ? "sg" : "pl"; }

std::string_view to_string(Tense) { return "past"; }

std::string_view to_string(Polarity v) { return v == Polarity::kAffirmative ? "aff" : "neg"; }

std::string_view to_string(Article v) {
  switch (v) {
    case Article::kDefinite: return "def";
    case Article::kIndefinite: return "indef";
    case Article::kNone: return "none";
  }
  return "none";
}

std::string_view to_string(Person) { return "3rd"; }

std::string_view to_string(Punct v) {
  switch (v) {
    case Punct::kPeriod: return "period";
    case Punct::kExclaim: return "exclaim";
    case Punct::kQuestion: return "question";
    case Punct::kComma: return "comma";
  }
  return "period";
}

std::string_view to_string(Position v) { return v == Position::kPre ? "pre" : "post"; }

std::optional<Number> number_from_string(std::string_view s) {
  if (s == "sg") return Number::kSingular;
  if (s == "pl") return Number::kPlural;
  return std::nullopt;
}

std::optional<Position> position_from_string(std::string_view s) {
  if (s == "pre") return Position::kPre;
  if (s == "post") return Position::kPost;
  return std::nullopt;
}

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column) {}

ReferenceError::ReferenceError(std::string name, const std::string& message)
    : Error(message), name_(std::move(name)) {}

BuildError::BuildError(std::string proposition_id, const std::string& message)
    : Error("proposition " + proposition_id + ": " + message),
      proposition_id_(std::move(proposition_id)) {}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out = d.severity == Severity::kError ? "error" : "warning";
  if (!d.location.empty()) out += " [" + d.location + "]";
  out += ": " + d.message;
  return out;
}

}  // namespace retell
