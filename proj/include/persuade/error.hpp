// Copyright 2026 The Persuade Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERSUADE_ERROR_HPP_
#define PERSUADE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace persuade {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad dimensions, non-stochastic rows, invalid parameters.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// An enumeration would exceed its configured budget.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what) {}
};

// Bayes' rule asked for a message that is sent with probability zero.
class OffPathMessage : public Error {
 public:
  explicit OffPathMessage(const std::string& what) : Error(what) {}
};

}  // namespace persuade

#endif  // PERSUADE_ERROR_HPP_
