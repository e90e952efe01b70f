// Copyright 2026 The spectral-moore Authors
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

namespace smoore {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SMOORE_DEFINE_ERROR(Name)            \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  }

SMOORE_DEFINE_ERROR(InvalidArgument);
SMOORE_DEFINE_ERROR(InvalidShape);
SMOORE_DEFINE_ERROR(InvalidC);
SMOORE_DEFINE_ERROR(NoSignChange);
SMOORE_DEFINE_ERROR(OutOfRange);
SMOORE_DEFINE_ERROR(NotARoot);
SMOORE_DEFINE_ERROR(HypothesisViolated);
SMOORE_DEFINE_ERROR(NotPrime);
SMOORE_DEFINE_ERROR(PrecisionExhausted);
SMOORE_DEFINE_ERROR(BracketFailure);
SMOORE_DEFINE_ERROR(DegenerateParameters);
SMOORE_DEFINE_ERROR(AngleOrder);
SMOORE_DEFINE_ERROR(UnknownName);
SMOORE_DEFINE_ERROR(NonPrimeQ);
SMOORE_DEFINE_ERROR(ParseError);

#undef SMOORE_DEFINE_ERROR

}  // namespace smoore
