#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crowns {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument violates a precondition (n < 2, non-positive radius, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Two bodies (or ring terms) coincide; the Newtonian term is singular.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& msg, int index_a, int index_b)
      : Error(msg), index_a(index_a), index_b(index_b) {}
  int index_a;
  int index_b;
};

/// Evaluation requested at (or numerically on top of) a pole of H.
class PoleError : public Error {
 public:
  PoleError(const std::string& msg, double abscissa) : Error(msg), abscissa(abscissa) {}
  double abscissa;
};

/// A bracketed refinement failed to converge within the iteration budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double lo, double hi)
      : Error(msg), lo(lo), hi(hi) {}
  double lo;
  double hi;
};

/// The global scan found more sign changes of F than the two all downstream
/// results assume.  Carries every sign-change interval found.
class ConjectureViolation : public Error {
 public:
  ConjectureViolation(const std::string& msg, int n,
                      std::vector<std::pair<double, double>> brackets)
      : Error(msg), n(n), brackets(std::move(brackets)) {}
  int n;
  std::vector<std::pair<double, double>> brackets;
};

/// Two internal routes that must agree did not (failed cross-check).
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& msg) : Error(msg) {}
};

/// A required root or bracket was not found in the searched range.
class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

/// Malformed input document (JSON schema or syntax).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A scalar function failed to evaluate during a scan; carries the abscissa.
class EvalError : public Error {
 public:
  EvalError(const std::string& msg, double abscissa) : Error(msg), abscissa(abscissa) {}
  double abscissa;
};

}  // namespace crowns
