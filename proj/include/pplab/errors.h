// Copyright 2026 The pplab Authors
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

#ifndef PPLAB_ERRORS_H
#define PPLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace pplab {

/// Malformed arguments: wrong shapes, broken invariants, out-of-range parameters.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A computation that is well-posed in principle but failed numerically.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Post-selection overlap Tr(post * pre) is too small for a weak value to exist.
struct PostSelectionImpossible : NumericalError {
    using NumericalError::NumericalError;
};

/// Pseudo-probability factorization needs Tr(rho pi_1) > 0.
struct FactorizationUndefined : NumericalError {
    using NumericalError::NumericalError;
};

/// A requested simulation would exceed the configured memory bound.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pplab

#endif
