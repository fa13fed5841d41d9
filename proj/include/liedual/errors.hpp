#pragma once

#include <stdexcept>
#include <string>

namespace liedual {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad label, non-dominant weight, ...).
struct InputError : Error {
  using Error::Error;
};

struct UnsupportedType : InputError {
  using InputError::InputError;
};

struct NotDominant : InputError {
  using InputError::InputError;
};

struct FixtureError : InputError {
  using InputError::InputError;
};

/// Peeling a restricted weight diagram went negative: the embedding map is
/// wrong. Never clamped.
struct NegativeMultiplicity : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

/// A sign rule was requested outside the family it is implemented for.
struct NotCovered : Error {
  using Error::Error;
};

}  // namespace liedual
