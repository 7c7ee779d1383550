// Copyright 2026 The Chief Authors
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

#ifndef CHIEF_ERROR_HPP_
#define CHIEF_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace chief {

// Failure classes map onto CLI exit codes (see tools/chief_main.cpp).
enum class ErrorKind {
  kInvalidArgument,  // bad parameters or violated preconditions
  kIo,               // unreadable/unwritable files, malformed input
  kAlgorithm,        // numerical or structural failure inside an algorithm
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error InvalidArgument(const std::string& what) {
  return Error(ErrorKind::kInvalidArgument, what);
}
inline Error IoError(const std::string& what) {
  return Error(ErrorKind::kIo, what);
}
inline Error AlgorithmError(const std::string& what) {
  return Error(ErrorKind::kAlgorithm, what);
}

}  // namespace chief

#endif  // CHIEF_ERROR_HPP_
