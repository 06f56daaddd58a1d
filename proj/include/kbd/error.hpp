#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kbd {

enum class ErrorKind {
  InvalidSignature,
  DuplicateDeclaration,
  UnknownSort,
  UnknownPredicate,
  ArityMismatch,
  SortMismatch,
  CyclicProgram,
  AbducibleInHead,
  UnknownAtom,
  IllSortedSentence,
  NonAbducibleKnowledge,
  UniverseTooLarge,
  NonAbducibleLiteral,
  EmptyFamily,
  PreconditionNotRejected,
  NoExplanation,
  NonEmptyIC,
  Syntax,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct SourceLocation {
  int line = 0;
  int column = 0;

  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

// Raised by the text front end. `cause()` keeps the validation error that
// was hit, so "undeclared sort in a rule" stays distinguishable from a
// plain token error.
class SyntaxError : public Error {
 public:
  SyntaxError(SourceLocation loc, ErrorKind cause, const std::string& message)
      : Error(ErrorKind::Syntax, std::to_string(loc.line) + ":" +
                                     std::to_string(loc.column) + ": " + message),
        location_(loc),
        cause_(cause) {}

  const SourceLocation& location() const noexcept { return location_; }
  ErrorKind cause() const noexcept { return cause_; }

 private:
  SourceLocation location_;
  ErrorKind cause_;
};

}  // namespace kbd
