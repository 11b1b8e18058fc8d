// Copyright 2026 The Resmex Authors
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

namespace resmex {

/// Base class of every error thrown by the library. Messages name the
/// violated condition and, where applicable, the measured violation.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define RESMEX_ERROR_CLASS(Name)                                     \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

RESMEX_ERROR_CLASS(NotHermitian);
RESMEX_ERROR_CLASS(NotPositive);
RESMEX_ERROR_CLASS(BadTrace);
RESMEX_ERROR_CLASS(NotTracePreserving);
RESMEX_ERROR_CLASS(DimMismatch);
RESMEX_ERROR_CLASS(ZeroState);
RESMEX_ERROR_CLASS(DimCap);
RESMEX_ERROR_CLASS(BadShape);
RESMEX_ERROR_CLASS(AlphaOutOfRange);
RESMEX_ERROR_CLASS(BadEpsilon);
RESMEX_ERROR_CLASS(SupportViolation);
RESMEX_ERROR_CLASS(BadPovm);
RESMEX_ERROR_CLASS(IndeterminateValue);
RESMEX_ERROR_CLASS(BadCut);
RESMEX_ERROR_CLASS(UnsupportedCut);
RESMEX_ERROR_CLASS(BadEnsembleSize);
RESMEX_ERROR_CLASS(UnknownSuite);
RESMEX_ERROR_CLASS(BadConfig);
RESMEX_ERROR_CLASS(ParseError);

#undef RESMEX_ERROR_CLASS

}  // namespace resmex
