#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace picgal {

inline constexpr const char* kToolName = "picgal";
inline constexpr const char* kToolVersion = "0.1.0";

// Exact arithmetic everywhere; doubles appear only in display fields.
using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad file, bad json shape).
struct ParseError : Error {
  using Error::Error;
};

// Input is well-formed but violates a mathematical contract
// (non-associative table, theta not an automorphism, M not an isometry, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Precondition violations on otherwise valid data (r out of range, k < 2, ...).
struct DomainError : Error {
  using Error::Error;
};

// Asking for the order of an infinite group.
struct InfiniteGroupError : DomainError {
  using DomainError::DomainError;
};

// A theorem-backed internal invariant failed; indicates a bug, never user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace picgal
