/* Copyright 2026 The adaptft Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <stdexcept>
#include <string>

namespace adaptft {

// Shape of an operand does not conform to the operation.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A length/count precondition was violated (empty input, kernel longer
// than signal, ...).
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric argument is outside its documented domain.
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configuration value is invalid (unknown kind, non-positive eps,
// even kernel length, ...).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An index is out of bounds.
struct IndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An API contract was violated (non-scalar loss, querying a frequency
// for the noise class, ...).
struct ContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A serialized file is malformed or has the wrong magic/version.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace adaptft
