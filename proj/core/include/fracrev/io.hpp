// Copyright 2026 The fracrev Authors.
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

// JSON forms of groups, graphs, certificates, reports, family specs and
// group functions. Readers throw Error(kParse) on structural problems and
// let validation errors (kInvalidGroup, kZeroInSet, ...) propagate.
// Writers emit fields in a fixed order so output is byte-stable.

#ifndef FRACREV_IO_HPP_
#define FRACREV_IO_HPP_

#include <nlohmann/json.hpp>
#include <string>

#include "fracrev/boolean.hpp"
#include "fracrev/cayley.hpp"
#include "fracrev/constructions.hpp"
#include "fracrev/fr_engine.hpp"
#include "fracrev/oracle.hpp"

namespace fracrev::io {

using Json = nlohmann::ordered_json;

Json Parse(const std::string& text);
Json ReadFile(const std::string& path);
std::string Dump(const Json& j);

// [2, 9]
FiniteAbelianGroup GroupFromJson(const Json& j);
Json ToJson(const FiniteAbelianGroup& group);

Json ToJson(const GroupElement& g);
GroupElement ElementFromJson(const Json& j, const FiniteAbelianGroup& group);

// {"group": [2, 9], "set": [[0, 1], ...]}
CayleyGraph GraphFromJson(const Json& j);
Json ToJson(const CayleyGraph& graph);

// {"group": ..., "integral": bool, "connected": bool, "degree": d,
//  "eigenvalues": [{"g": [...], "value": int} | {"g": [...], "re": x, "im": y}]}
Json ToJson(const CayleyGraph& graph, const Spectrum& spectrum);

// {"a", "kind", "k", "modulus", "rho0", "rho1", "t", "alpha", "beta", "valid_k"}
Json ToJson(const FRWitness& w);
FRWitness WitnessFromJson(const Json& j, const FiniteAbelianGroup& group);

// {"pass", "max_deviation", "tolerance", "unitarity_defect", "permutation_ok"}
Json ToJson(const VerificationReport& report);

// {"variant": "RAMANUJAN_A", ...}
FamilySpec FamilyFromJson(const Json& j);

// {"group": [9], "values": [...]}
GroupFunction GroupFunctionFromJson(const Json& j);

}  // namespace fracrev::io

#endif  // FRACREV_IO_HPP_
