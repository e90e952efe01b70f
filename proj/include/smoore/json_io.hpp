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

#include "json.hpp"
#include "smoore/bounds.hpp"
#include "smoore/feasibility.hpp"
#include "smoore/gfpoly.hpp"
#include "smoore/graphs.hpp"
#include "smoore/lpcert.hpp"
#include "smoore/number.hpp"
#include "smoore/spectra.hpp"

// Rationals are written as {"num", "den"}, with each part a JSON integer when it
// fits in 64 bits and a decimal string otherwise.
template <>
struct nlohmann::adl_serializer<mpq_class> {
  static void to_json(nlohmann::ordered_json& j, const mpq_class& q);
  static void from_json(const nlohmann::ordered_json& j, mpq_class& q);
};

namespace smoore {

using Json = nlohmann::ordered_json;

// Exact numbers become {"num", "den"}; approximate ones a plain float.
void to_json(Json& j, const Number& v);
void from_json(const Json& j, Number& v);
// Exact: {"a", "b", "r", "value", "text"} for a + b sqrt(r). Approximate: a float.
void to_json(Json& j, const Theta& v);
void from_json(const Json& j, Theta& v);
void to_json(Json& j, const Polynomial& v);
void from_json(const Json& j, Polynomial& v);
void to_json(Json& j, const GFPoly& v);
void from_json(const Json& j, GFPoly& v);

#define SMOORE_JSON(T)            \
  void to_json(Json& j, const T& v); \
  void from_json(const Json& j, T& v)

SMOORE_JSON(BoundResult);
SMOORE_JSON(Comparison);
SMOORE_JSON(QuotientMatrix);
SMOORE_JSON(SpectrumResult);
SMOORE_JSON(LinearizationTable);
SMOORE_JSON(Certificate);
SMOORE_JSON(LpResult);
SMOORE_JSON(DRGCandidate);
SMOORE_JSON(MultiplicityRecord);
SMOORE_JSON(MultiplicityCheck);
SMOORE_JSON(IrrationalBound);
SMOORE_JSON(ModCaseReport);
SMOORE_JSON(Table7Row);
SMOORE_JSON(PairWitness);
SMOORE_JSON(ScreenResult);
SMOORE_JSON(QCheck);
SMOORE_JSON(NonexistenceReport);
SMOORE_JSON(FactorizationWitness);
SMOORE_JSON(QScreenResult);
SMOORE_JSON(Table1Entry);
SMOORE_JSON(GraphReport);

#undef SMOORE_JSON

std::string verdict_name(Verdict v);

}  // namespace smoore
