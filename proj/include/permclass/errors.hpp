#pragma once

#include <stdexcept>
#include <string>

namespace permclass {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSquare : Error { using Error::Error; };
struct BadEntry : Error { using Error::Error; };
struct NotPermutation : Error { using Error::Error; };
struct NotMonomial : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BlockOutOfRange : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// A violated internal postcondition: always a defect, never bad input.
struct VerificationError : Error { using Error::Error; };

// Malformed text input; positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, int line_, int column_)
      : Error("line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ": " + what),
        line(line_), column(column_) {}

  int line;
  int column;
};

}  // namespace permclass
