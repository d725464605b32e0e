#pragma once

#include <stdexcept>
#include <string>

namespace s2flow {

/// Precondition on a value or configuration was violated (mixed fields,
/// non-antipode-closed set, SAT instance handed to an UNSAT-only routine).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two circles or planes coincide, so an intersection is not a finite set.
class DegenerateConfiguration : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An exact result (typically a square root) is not an element of the field.
class NotInField : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A combinatorial self-check failed: wrong counts, a non-cubic graph, ...
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The SAT encoding produced a model that does not decode to a labeling.
class EncodingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace s2flow
