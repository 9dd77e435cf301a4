// Copyright 2026 The kcut-qaoa Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcut {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Invalid argument: out-of-range index, bad probability, wrong color, ...
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& message) : Error(message) {}
};

/// A problem does not fit the configured qubit or enumeration budget.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message) : Error(message) {}
};

/// Malformed graph file. The line number is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A compiled circuit does not realise the unitary it claims to.
class VerificationError : public Error {
 public:
  VerificationError(std::size_t basis_index, const std::string& message)
      : Error("basis state " + std::to_string(basis_index) + ": " + message),
        basis_index_(basis_index) {}

  std::size_t basis_index() const noexcept { return basis_index_; }

 private:
  std::size_t basis_index_;
};

/// Requested gate arity or construction that the compiler does not provide.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& message) : Error(message) {}
};

/// The objective returned a non-finite value during optimization.
class OptimizationError : public Error {
 public:
  OptimizationError(std::vector<double> point, const std::string& message)
      : Error(message), point_(std::move(point)) {}

  const std::vector<double>& point() const noexcept { return point_; }

 private:
  std::vector<double> point_;
};

}  // namespace kcut
