#pragma once

#include <stdexcept>
#include <string>

namespace retell {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed story, lexicon, frame or voice document.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A document names an entity, frame or proposition that does not exist.
class ReferenceError : public Error {
 public:
  ReferenceError(std::string name, const std::string& message);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

// Lexicon lookup miss.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

class FeatureMismatchError : public Error {
 public:
  using Error::Error;
};

// Second I/II/III arc under one governor.
class RelationConflictError : public Error {
 public:
  using Error::Error;
};

// Arc label not allowed under the governor's lexico-syntactic class.
class ClassError : public Error {
 public:
  using Error::Error;
};

// Clause construction failure, tagged with the offending proposition.
class BuildError : public Error {
 public:
  BuildError(std::string proposition_id, const std::string& message);
  const std::string& proposition_id() const { return proposition_id_; }

 private:
  std::string proposition_id_;
};

class LinearizationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedRelationError : public Error {
 public:
  using Error::Error;
};

class UnknownPrepositionError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace retell
