#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polybound {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Thrown when a polynomial product would exceed the configured term cap.
struct TermBudgetExceeded : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  std::size_t pivot_index;
  explicit NotPositiveDefinite(std::size_t idx)
      : Error("matrix not positive definite (pivot " + std::to_string(idx) + ")"),
        pivot_index(idx) {}
};

struct NoConvergence : Error {
  using Error::Error;
};

struct BreakdownNonPositiveBeta : Error {
  std::size_t index;
  explicit BreakdownNonPositiveBeta(std::size_t idx)
      : Error("recurrence breakdown: nonpositive beta at index " + std::to_string(idx)),
        index(idx) {}
};

struct InvalidOrder : Error {
  using Error::Error;
};

struct InvalidInterval : Error {
  using Error::Error;
};

struct DenominatorZero : Error {
  using Error::Error;
};

struct AnchorOutsideClosure : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace polybound
