#ifndef HOPFCAT_ERRORS_HPP
#define HOPFCAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcat {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Structure maps with inconsistent shapes. Distinct from an axiom failure.
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

class InvalidPrimeError : public Error {
 public:
  using Error::Error;
};

class InvalidGroupError : public Error {
 public:
  using Error::Error;
};

class InvalidHomError : public Error {
 public:
  using Error::Error;
};

class UnknownGroupError : public Error {
 public:
  using Error::Error;
};

/// A structure that must be a Hopf algebra (or morphism, action, ...) is not.
class AxiomError : public Error {
 public:
  using Error::Error;
};

class NormalityError : public Error {
 public:
  using Error::Error;
};

class DiagramError : public Error {
 public:
  using Error::Error;
};

class NotCat1Error : public Error {
 public:
  using Error::Error;
};

class MissingSectionError : public Error {
 public:
  using Error::Error;
};

/// A postcondition that the theory guarantees did not hold. Always a bug
/// in the library or a violated precondition upstream.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class VersionMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfcat

#endif  // HOPFCAT_ERRORS_HPP
