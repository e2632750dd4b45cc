#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Cayley table violates a group axiom; the message names the axiom and a witness.
struct NotAGroup : Error {
  using Error::Error;
};

struct BadShape : Error {
  using Error::Error;
};

struct BadParameter : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct OrderLimitExceeded : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NotAWitness : Error {
  using Error::Error;
};

struct NotAPGroup : Error {
  using Error::Error;
};

}  // namespace gg
