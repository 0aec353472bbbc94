#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

// Precondition violations (bad n, non-bijective permutation, zero linear form, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A localization sum that should land in Sym T* came out as a proper fraction.
class IntegralityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hilbert-series deconvolution produced a negative Betti number.
class FreenessViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A correspondence identity did not hold; the message names the identity.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace milnor
