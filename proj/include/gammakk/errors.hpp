#pragma once

#include <stdexcept>
#include <string>

namespace gammakk {

// Base of every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that cannot be parsed or is structurally broken (duplicate vertex in
// a facet, non-integer token, ...).
struct MalformedInput : Error {
  using Error::Error;
};

// Argument outside the domain of an operation (face not in complex, unknown
// vertex, parameter below its minimum).
struct DomainError : Error {
  using Error::Error;
};

// A documented precondition of the operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// An enumeration or complex would exceed its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

namespace detail {

inline void require_budget(bool ok, const std::string& what) {
  if (!ok) throw BudgetExceeded(what);
}

}  // namespace detail
}  // namespace gammakk
