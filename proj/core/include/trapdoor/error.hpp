// Copyright 2026 The Trapdoor Authors
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

#ifndef TRAPDOOR_ERROR_HPP_
#define TRAPDOOR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace trapdoor {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or structural invariant (bad arguments, mismatched
// dimensions, empty inputs where data is required).
class ContractError : public Error {
 public:
  using Error::Error;
};

// The request is well-formed but outside what this implementation computes,
// e.g. exact enumeration beyond the brute-force dimension guard.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; messages carry "source:line:" context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid sweep configuration (unknown learner id, empty grid, bad key).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure; messages carry the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trapdoor

#endif  // TRAPDOOR_ERROR_HPP_
