// Copyright 2026 The flo Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace flo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument values (out of range, wrong sector, non-group matrix, ...).
struct ValidationError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
// Eigenvalue at -1 where a Cayley map is needed.
struct SingularityError : Error {
    using Error::Error;
};
// Desk-scale memory/time guards.
struct GuardError : Error {
    using Error::Error;
};
struct RecoveryFailure : Error {
    using Error::Error;
};
struct InsufficientPoints : Error {
    using Error::Error;
};

}  // namespace flo
