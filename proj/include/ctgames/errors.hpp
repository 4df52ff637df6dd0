#pragma once

#include <stdexcept>
#include <string>

namespace ctgames {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed documents: bad rationals, unknown fields, schema violations.
struct ParseError : Error {
  using Error::Error;
};

// Structurally invalid game trees: cycles, orphans, payoff arity, ...
struct ValidationError : Error {
  using Error::Error;
};

// Well-formed values used against the wrong tree/seat, probabilities that
// do not normalize, unknown node ids.
struct DomainError : Error {
  using Error::Error;
};

// Combinatorial cap exceeded in an enumeration step.
struct BudgetError : Error {
  using Error::Error;
};

// Output file could not be written or moved into place.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ctgames
