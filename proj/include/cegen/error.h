// Copyright 2026 The cegen Authors
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

#ifndef CEGEN_ERROR_H
#define CEGEN_ERROR_H

#include <stdexcept>
#include <string>

namespace cegen {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parameter vector length does not match the circuit's symbol count.
class ParameterCountError : public Error {
    using Error::Error;
};

/// Malformed circuit, qubit index out of range, or mismatched register sizes.
class StructuralError : public Error {
    using Error::Error;
};

/// A state or density matrix is not normalized within tolerance.
class NumericalStateError : public Error {
    using Error::Error;
};

/// Input carries no usable information (zero vector, empty sample, one class).
class DegenerateInputError : public Error {
    using Error::Error;
};

/// Array has the wrong length for the requested operation.
class ShapeError : public Error {
    using Error::Error;
};

/// Problem is too large for the exact algorithm.
class CapacityError : public Error {
    using Error::Error;
};

/// Caller broke a documented precondition.
class ContractViolation : public Error {
    using Error::Error;
};

/// Bad configuration file or command-line value.
class ConfigError : public Error {
    using Error::Error;
};

}  // namespace cegen

#endif
