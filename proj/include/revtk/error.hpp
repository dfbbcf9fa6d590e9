// Copyright 2026 The Revtk Authors.
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

#ifndef REVTK_ERROR_HPP_
#define REVTK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace revtk {

// Base for all toolkit errors. Subclasses distinguish failure modes that
// callers are expected to handle differently (CLI exit codes, retries).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad value passed by the caller (empty input, out-of-range parameter).
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& msg) : Error(msg) {}
};

// Incompatible tensor/grid dimensions. Message carries both shapes.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// A precondition documented on the operation was violated.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Requested reverberation time cannot be realized in the given room
// (Sabine absorption would exceed 1).
class InfeasibleT60Error : public Error {
 public:
  explicit InfeasibleT60Error(const std::string& msg) : Error(msg) {}
};

// Impulse response does not decay enough for a Schroeder fit.
class InsufficientDecayError : public Error {
 public:
  explicit InsufficientDecayError(const std::string& msg) : Error(msg) {}
};

// Correlation undefined (zero variance in an input sequence).
class UndefinedCorrelationError : public Error {
 public:
  explicit UndefinedCorrelationError(const std::string& msg) : Error(msg) {}
};

// Malformed or inconsistent configuration / manifest.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Checkpoint container parse or migration failure.
class CheckpointError : public Error {
 public:
  explicit CheckpointError(const std::string& msg) : Error(msg) {}
};

// Optimizer invoked with unpopulated gradients or similar misuse.
class InvalidStateError : public Error {
 public:
  explicit InvalidStateError(const std::string& msg) : Error(msg) {}
};

// File I/O failure (missing file, short read, bad magic).
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace revtk

#endif  // REVTK_ERROR_HPP_
