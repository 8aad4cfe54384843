// Copyright 2026 The LGS Authors
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

namespace lgs {

enum class ErrorCode {
    InvalidArgument,
    Validation,     // e.g. a non-normalized input qubit
    Parse,          // state literal / circuit text
    Miswired,       // amplitude reached a PBS port the circuit does not model
    ZeroCoupling,   // hot-cavity coefficients requested with eta_h = eta_v = 0
    Unstable,       // pulse integration diverged
    LimitExceeded,  // exhaustive enumeration too large
};

/// Single exception type for the library. The C API maps `code()` onto its
/// status enum; the message is kept for `lgs_last_error()`.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace lgs
