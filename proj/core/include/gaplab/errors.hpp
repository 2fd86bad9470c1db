// Copyright 2026 The gaplab Authors
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

namespace gaplab {

/// Base class for every error raised by gaplab.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not agree (vector length, matrix size, factor dims).
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Bipartite shape the operation does not handle (e.g. d1 > d2).
class UnsupportedShapeError : public Error {
  public:
    using Error::Error;
};

/// A density is requested for a density matrix with a zero eigenvalue.
class SingularDensityError : public Error {
  public:
    using Error::Error;
};

/// A supposed orthonormal basis/system fails the Gram check.
class BasisError : public Error {
  public:
    using Error::Error;
};

/// Radial projection of a zero vector carrying positive mass.
class SingularProjectionError : public Error {
  public:
    using Error::Error;
};

/// No product eigenvalue falls inside the requested energy window.
class EmptyShellError : public Error {
  public:
    using Error::Error;
};

} // namespace gaplab
