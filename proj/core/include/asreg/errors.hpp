#pragma once

#include <stdexcept>
#include <string>

namespace asreg {

/// Base of every error raised by the library. `stage()` names the
/// pipeline stage so the CLI can report where a run stopped.
class Error : public std::runtime_error {
public:
  Error(std::string stage, const std::string& message)
      : std::runtime_error(message), stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

class FieldMismatch : public Error {
public:
  explicit FieldMismatch(const std::string& what) : Error("field", what) {}
};

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error("parse", "line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Input is well formed but violates a presentation invariant
/// (inhomogeneous relation, degree-0 generator, ...).
class InvalidPresentation : public Error {
public:
  explicit InvalidPresentation(const std::string& what)
      : Error("presentation", what) {}
};

/// A request needs data beyond the internal-degree or homological cap.
class CapExceeded : public Error {
public:
  CapExceeded(std::string stage, const std::string& what)
      : Error(std::move(stage), what) {}
};

/// The E(k) socle is not one-dimensional: the input is not Gorenstein, or
/// the Ext algebra is not finite under the caps.
class SocleError : public Error {
public:
  explicit SocleError(const std::string& what) : Error("frobenius", what) {}
};

class DegeneratePairing : public Error {
public:
  explicit DegeneratePairing(const std::string& what)
      : Error("frobenius", what) {}
};

class NotGorenstein : public Error {
public:
  explicit NotGorenstein(const std::string& what) : Error("hdet", what) {}
};

/// Shape mismatch between maps or complexes that were asked to compose.
class ShapeMismatch : public Error {
public:
  explicit ShapeMismatch(const std::string& what) : Error("complexes", what) {}
};

} // namespace asreg
