// Copyright 2026 The quditec developers
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

namespace quditec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / validation
struct LengthMismatch : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidDimension : Error { using Error::Error; };
struct InvalidWires : Error { using Error::Error; };
struct InvalidLabel : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct UnknownGate : Error { using Error::Error; };
struct UnsupportedDimension : Error { using Error::Error; };

// Protocol failures
struct AmbiguousOutcome : Error { using Error::Error; };
struct NotFactorizable : Error { using Error::Error; };

// Text formats (labels, circuit files, JSON payloads)
struct ParseError : Error { using Error::Error; };

}  // namespace quditec
