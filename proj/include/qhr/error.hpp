#pragma once

#include <stdexcept>
#include <string>

namespace qhr {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& w = "operands belong to different fields") : Error(w) {}
};

struct NotCyclotomic : Error {
  NotCyclotomic() : Error("field spec is not cyclotomic") {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& w = "shape mismatch") : Error(w) {}
};

struct Singular : Error {
  explicit Singular(const std::string& w = "matrix is singular") : Error(w) {}
};

struct LegMismatch : Error {
  explicit LegMismatch(const std::string& w = "tensor leg mismatch") : Error(w) {}
};

struct FactorMismatch : Error {
  explicit FactorMismatch(const std::string& w = "tensor factor mismatch") : Error(w) {}
};

struct ActionInvalid : Error {
  explicit ActionInvalid(const std::string& w = "module-algebra action invalid") : Error(w) {}
};

/// Thrown when a construction-time identity fails (fail-fast policy).
struct AxiomFailure : Error {
  explicit AxiomFailure(const std::string& w) : Error(w) {}
};

struct FormulaMismatch : Error {
  explicit FormulaMismatch(const std::string& w) : Error(w) {}
};

struct HomomorphismFailure : Error {
  explicit HomomorphismFailure(const std::string& w) : Error(w) {}
};

struct IllDefinedProduct : Error {
  explicit IllDefinedProduct(const std::string& w) : Error(w) {}
};

struct NotInvariant : Error {
  explicit NotInvariant(const std::string& w) : Error(w) {}
};

struct NotHomomorphism : Error {
  explicit NotHomomorphism(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(w) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& w) : Error(w) {}
};

}  // namespace qhr
