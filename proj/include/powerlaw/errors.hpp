// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powerlaw {

// Every sample value equals x_min: the log-likelihood increases without bound
// in alpha and no finite maximum-likelihood estimate exists.
class UnboundedLikelihoodError : public std::runtime_error {
 public:
  explicit UnboundedLikelihoodError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// An estimate landed on the boundary of the supported alpha range (1, 50].
class BoundaryError : public std::runtime_error {
 public:
  explicit BoundaryError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// An internal invariant failed, e.g. the exact estimator produced a lambda
// statistic below the numerical clamp window.
class InternalConsistencyError : public std::runtime_error {
 public:
  explicit InternalConsistencyError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// Line-numbered failure while reading an integer sample file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace powerlaw
