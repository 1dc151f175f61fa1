// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace greendoc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a domain invariant (e.g. pue < 1, lo > hi).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A JSON document does not match the expected schema. `pointer()` is the
/// JSON pointer of the offending location.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// A malformed invoice row.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A pipeline stage failed; wraps the stage name around the cause.
class PipelineError : public Error {
 public:
  PipelineError(std::string stage, const std::string& message)
      : Error(stage + " stage: " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// A scenario name that the configuration does not define.
class UnknownScenarioError : public Error {
 public:
  explicit UnknownScenarioError(const std::string& name) : Error("unknown scenario '" + name + "'") {}
};

}  // namespace greendoc
