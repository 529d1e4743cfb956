// Copyright 2026 The sotype Authors
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

namespace sot {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its valid range (non-prime characteristic, bad Sz(q), ...).
class parameter_error : public error {
 public:
  using error::error;
};

/// Malformed text input: group specs, generator files, manifests.
class parse_error : public error {
 public:
  using error::error;
};

/// A built group's order disagrees with the order it was declared to have.
class order_gate_error : public error {
 public:
  using error::error;
};

/// A file-backed group's data file is absent.
class missing_data : public error {
 public:
  using error::error;
};

/// Exhaustive enumeration would exceed the configured element cap.
class cap_exceeded : public error {
 public:
  using error::error;
};

/// Operands belong to different carriers (fields, degrees, dimensions).
class carrier_mismatch : public error {
 public:
  using error::error;
};

/// Two independent computations of the same quantity disagreed.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace sot
