#pragma once

#include <stdexcept>
#include <string>

namespace gasimon {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two bit strings (or a bit string and a container) disagree on width.
class WidthError : public Error {
public:
  using Error::Error;
};

/// Malformed textual input; carries 1-based line/column of the offence.
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// A function table has the wrong number of entries.
class ArityError : public Error {
public:
  using Error::Error;
};

/// The requested output width cannot hold the requested number of values.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A mask of all zeros was supplied where a nonzero mask is required.
class ZeroMaskError : public Error {
public:
  using Error::Error;
};

/// The oracle gate was applied to a state outside its domain
/// (a blade with nonzero bits in the output register).
class OracleDomainError : public Error {
public:
  using Error::Error;
};

/// Mask readout failed: neither candidate verifies against the table.
class ReadoutError : public Error {
public:
  using Error::Error;
};

/// An index or width is outside the supported range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Matrix dimensions do not match.
class DimError : public Error {
public:
  using Error::Error;
};

/// A matrix does not represent a real-coefficient multivector
/// (trace division inexact or imaginary residue present).
class NotMultivectorError : public Error {
public:
  using Error::Error;
};

/// The sampling loop exhausted its round budget before the linear
/// system reached sufficient rank.
class RoundLimitError : public Error {
public:
  using Error::Error;
};

}  // namespace gasimon
