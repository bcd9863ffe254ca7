// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UME_ERRORS_H_
#define UME_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ume {

// Base for every error raised by the toolkit. The CLI maps these to exit 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateEdgeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DanglingEndpointError : public ParseError {
 public:
  using ParseError::ParseError;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

// I - (M - M.r.d) is numerically singular: a recurrent class that never
// leaks under the plan.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

class ColoringTimeoutError : public Error {
 public:
  using Error::Error;
};

class ImproperColoringError : public Error {
 public:
  using Error::Error;
};

class MissingColorError : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLargeError : public Error {
 public:
  using Error::Error;
};

class PathExplosionError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLargeError : public Error {
 public:
  using Error::Error;
};

}  // namespace ume

#endif  // UME_ERRORS_H_
