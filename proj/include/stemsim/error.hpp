// Copyright 2026 The stemsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STEMSIM_ERROR_HPP_
#define STEMSIM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace stemsim {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kValidation,
  kLengthMismatch,
  kZeroMarginal,
  kNotConverged,
  kTooLarge,
  kInvalidCode,
  kIo,
};

// Every failure raised by the library carries one of the kinds above so the
// C API can map it onto a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stemsim

#endif  // STEMSIM_ERROR_HPP_
