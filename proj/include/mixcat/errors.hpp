#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixcat {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composing arrows whose boundary objects disagree.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Shape or size violations (matrix dimensions, non-endomorphisms).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A finite function applied outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed nesting of monad elements.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Mixing morphisms that live in different enriched models.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Weights that are negative or whose total violates the model.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// An empty alternative set where the model requires at least one.
class NonEmptyError : public Error {
 public:
  using Error::Error;
};

/// A homset algebra description lacking an operation its kind needs.
class SpecificationError : public Error {
 public:
  using Error::Error;
};

/// A basic type with no object assigned.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

/// No pregroup reduction exists, or a reduction does not replay.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Requested enumeration size above the supported bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// Lexicon loading or lookup failure. Line is 0 when unknown.
class LexiconError : public Error {
 public:
  LexiconError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mixcat
