// Copyright 2026 The causaldet Authors
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

#ifndef CAUSALDET_ERRORS_H
#define CAUSALDET_ERRORS_H

#include <stdexcept>
#include <string>

namespace causaldet {

/// A matrix or parameter that does not describe a physical quantum state.
class PhysicalityError : public std::domain_error {
   public:
    explicit PhysicalityError(const std::string &what) : std::domain_error(what) {
    }
};

/// Measurement data that cannot be used for estimation (e.g. an empty setting).
class DataError : public std::runtime_error {
   public:
    explicit DataError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace causaldet

#endif
