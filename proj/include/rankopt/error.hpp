/*
 * Copyright 2026 The rankopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace rankopt {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter lies outside its admissible range (probability, degree, ...).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Fewer evaluations than an operation needs.
class InsufficientSample : public Error {
 public:
  using Error::Error;
};

/// Two evaluations carry the same value where a strict order is required.
class TieError : public Error {
 public:
  using Error::Error;
};

/// Integer arithmetic would overflow (e.g. feature-space dimension).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Structure/dimension combination that has no consistency test.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

/// The simplex exceeded its iteration cap.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Lookup by name failed (benchmark registry, CLI values).
class UnknownName : public Error {
 public:
  using Error::Error;
};

}  // namespace rankopt
