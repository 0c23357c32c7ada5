// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eqdecomp {

/// Base class for every error raised by the library. The message is meant to
/// be shown to a user verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, permutation, or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but violates a mathematical precondition
/// (incompatible matrix, non-equitable partition, wrong automorphism kind...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqdecomp
