#pragma once

#include <stdexcept>
#include <string>

namespace braidskein {

/// Malformed braid word or polynomial text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move was requested whose precondition does not hold.
class MoveError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arithmetic left the coefficient ring as the engine uses it (negative B power).
class RingDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operands live over different strand counts.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A vector that cannot have come out of the resolution engine.
class MalformedVectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace braidskein
