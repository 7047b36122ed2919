// Copyright 2026 the carlitzq authors
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

#ifndef CARLITZQ_ERRORS_HPP
#define CARLITZQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carlitzq {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Evaluation of a rational function at a root of its denominator.
class PoleAtPoint : public Error {
public:
    using Error::Error;
};

/// Specialization q := 1 of a value that genuinely diverges there.
class PoleAtOne : public PoleAtPoint {
public:
    using PoleAtPoint::PoleAtPoint;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// q^{-X}·P left the polynomial ring: P has a nonzero constant term.
class NonDivisible : public Error {
public:
    using Error::Error;
};

class InsufficientValues : public Error {
public:
    using Error::Error;
};

/// A numeric q outside the open unit interval required by the series forms.
class InvalidQ : public Error {
public:
    using Error::Error;
};

/// An internal cross-check between two independent constructions failed.
/// Always indicates an implementation bug, never a legitimate input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace carlitzq

#endif // CARLITZQ_ERRORS_HPP
