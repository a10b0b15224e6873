// Copyright 2026 The conjcover Authors
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

#ifndef CONJCOVER_ERROR_HPP_
#define CONJCOVER_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conjcover {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed cycle notation or group specification. `position` is a 0-based
// character offset into the offending text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A group, lattice or search grew past a configured limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Arguments that violate an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace conjcover

#endif  // CONJCOVER_ERROR_HPP_
