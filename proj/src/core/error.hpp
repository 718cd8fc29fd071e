// Copyright 2026 The fable authors
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

#include <stdexcept>
#include <string>

namespace fable {

/// Machine-readable failure categories. These mirror the status codes of the
/// public C API one-to-one.
enum class ErrorCode {
  InvalidArgument,
  Dimension,
  Domain,
  Degenerate,
  ResourceLimit,
  Io,
  Parse,
  NoConvergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an iterative method hits its iteration cap. Carries the last
/// iterate so callers can still inspect a best-effort value.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_estimate,
                   int iterations)
      : Error(ErrorCode::NoConvergence, what),
        last_estimate_(last_estimate),
        iterations_(iterations) {}

  double last_estimate() const { return last_estimate_; }
  int iterations() const { return iterations_; }

 private:
  double last_estimate_;
  int iterations_;
};

}  // namespace fable
