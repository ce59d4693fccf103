// Copyright 2026 The spectra authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SPECTRA_ERROR_HPP
#define SPECTRA_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectra {

enum class ErrorCode {
  kInvalidArgument = 1,
  kBoundExceeded,
  kNotIdeal,
  kNotPrime,
  kReducible,
  kParse,
  kSemantic,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a ring expression; `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& expected,
             const std::string& what)
      : Error(ErrorCode::kParse, what + " at position " +
                                     std::to_string(position) +
                                     " (expected " + expected + ")"),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace spectra

#endif  // SPECTRA_ERROR_HPP
