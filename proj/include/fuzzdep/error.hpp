#pragma once

#include <stdexcept>
#include <string>

namespace fuzzdep {

enum class ErrorKind {
  SyntaxError,
  DomainViolation,
  DuplicateAttribute,
  UnknownAttribute,
  EmptyAttributeSet,
  TrapezoidNeedsAlpha,
  AlphaOutOfRange,
  EmptyOperand,
  NonPositiveMax,
  UniverseTooLarge,
  MalformedQuery,
  SchemaOverlapInvalid,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace fuzzdep
