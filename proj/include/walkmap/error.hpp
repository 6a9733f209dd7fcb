#ifndef WALKMAP_ERROR_HPP
#define WALKMAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace walkmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: out-of-range endpoints, invalid rotations, bad walk text.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (mismatched endpoints, wrong universe, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace walkmap

#endif  // WALKMAP_ERROR_HPP
