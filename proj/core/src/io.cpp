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

#include "fracrev/io.hpp"

#include <fstream>
#include <sstream>

#include "fracrev/error.hpp"

namespace fracrev::io {

namespace {

[[noreturn]] void Malformed(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Malformed("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) Malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

Int AsInt(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) Malformed(what + " must be an integer");
  return j.get<Int>();
}

std::vector<Int> AsIntArray(const Json& j, const std::string& what) {
  if (!j.is_array()) Malformed(what + " must be an array of integers");
  std::vector<Int> out;
  for (const Json& x : j) out.push_back(AsInt(x, what + " entry"));
  return out;
}

std::vector<Int> BitVector(const Json& j) {
  if (j.is_string()) {
    std::vector<Int> bits;
    for (char c : j.get<std::string>()) {
      if (c != '0' && c != '1') Malformed("bit strings may only contain 0 and 1");
      bits.push_back(c - '0');
    }
    return bits;
  }
  return AsIntArray(j, "bit vector");
}

Json ComplexJson(std::complex<double> z) {
  // Normalize -0.0 so output does not depend on rounding direction.
  auto clean = [](double x) { return x == 0.0 ? 0.0 : x; };
  return Json{{"re", clean(z.real())}, {"im", clean(z.imag())}};
}

}  // namespace

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    Malformed(std::string("invalid JSON: ") + e.what());
  }
}

Json ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

FiniteAbelianGroup GroupFromJson(const Json& j) {
  return FiniteAbelianGroup::Make(AsIntArray(j, "group"));
}

Json ToJson(const FiniteAbelianGroup& group) {
  return Json(std::vector<Int>(group.orders().begin(), group.orders().end()));
}

Json ToJson(const GroupElement& g) { return Json(g.coords); }

GroupElement ElementFromJson(const Json& j, const FiniteAbelianGroup& group) {
  if (j.is_number_integer() && group.rank() == 1) return group.Normalize({j.get<Int>()});
  auto coords = AsIntArray(j, "group element");
  if (coords.size() != group.rank()) {
    Malformed("group element needs " + std::to_string(group.rank()) + " coordinates");
  }
  return group.Normalize(std::move(coords));
}

CayleyGraph GraphFromJson(const Json& j) {
  FiniteAbelianGroup group = GroupFromJson(Field(j, "group"));
  const Json& set = Field(j, "set");
  if (!set.is_array()) Malformed("\"set\" must be an array of elements");
  std::vector<GroupElement> raw;
  for (const Json& x : set) raw.push_back(ElementFromJson(x, group));
  return CayleyGraph::Make(std::move(group), raw);
}

Json ToJson(const CayleyGraph& graph) {
  Json set = Json::array();
  for (const GroupElement& s : graph.connection_set().elements()) set.push_back(ToJson(s));
  return Json{{"group", ToJson(graph.group())}, {"set", std::move(set)}};
}

Json ToJson(const CayleyGraph& graph, const Spectrum& spectrum) {
  const FiniteAbelianGroup& group = graph.group();
  Json values = Json::array();
  const auto approx = spectrum.Approximate();
  for (std::size_t i = 0; i < spectrum.values().size(); ++i) {
    Json entry{{"g", ToJson(group.Unrank(i))}};
    if (spectrum.integral()) {
      entry["value"] = (*spectrum.integral_values())[i];
    } else {
      const Json z = ComplexJson(approx[i]);
      entry["re"] = z["re"];
      entry["im"] = z["im"];
    }
    values.push_back(std::move(entry));
  }
  return Json{{"group", ToJson(group)},
              {"degree", graph.degree()},
              {"connected", graph.connected()},
              {"integral", spectrum.integral()},
              {"eigenvalues", std::move(values)}};
}

Json ToJson(const FRWitness& w) {
  return Json{{"a", ToJson(w.a)},
              {"kind", ToString(w.kind)},
              {"k", w.k},
              {"modulus", w.modulus},
              {"rho0", w.rho0},
              {"rho1", w.rho1},
              {"t", w.Time()},
              {"alpha", ComplexJson(w.Alpha())},
              {"beta", ComplexJson(w.Beta())},
              {"valid_k", w.valid_k}};
}

FRWitness WitnessFromJson(const Json& j, const FiniteAbelianGroup& group) {
  FRWitness w;
  w.a = ElementFromJson(Field(j, "a"), group);
  w.k = AsInt(Field(j, "k"), "k");
  w.modulus = AsInt(Field(j, "modulus"), "modulus");
  if (w.k < 1 || w.modulus < 1) Malformed("k and modulus must be positive");
  w.rho0 = AsInt(Field(j, "rho0"), "rho0");
  w.rho1 = AsInt(Field(j, "rho1"), "rho1");
  w.kind = FRWitness::Classify(w.rho0, w.rho1, w.modulus);
  if (j.contains("valid_k")) w.valid_k = AsIntArray(j["valid_k"], "valid_k");
  return w;
}

Json ToJson(const VerificationReport& report) {
  return Json{{"pass", report.pass},
              {"max_deviation", report.max_deviation},
              {"tolerance", report.tolerance},
              {"unitarity_defect", report.unitarity_defect},
              {"permutation_ok", report.permutation_ok}};
}

FamilySpec FamilyFromJson(const Json& j) {
  const Json& variant_json = Field(j, "variant");
  if (!variant_json.is_string()) Malformed("\"variant\" must be a string");
  const std::string variant = variant_json.get<std::string>();

  if (variant == "RAMANUJAN_A") {
    RamanujanParams p;
    p.p = AsInt(Field(j, "p"), "p");
    p.r = static_cast<int>(AsInt(Field(j, "r"), "r"));
    if (j.contains("H")) p.h_orders = AsIntArray(j["H"], "H");
    return {p};
  }
  if (variant == "MULTI_PRIME_B") {
    MultiPrimeParams p;
    const Json& list = Field(j, "prime_powers");
    if (!list.is_array()) Malformed("\"prime_powers\" must be an array of [p, r] pairs");
    for (const Json& pair : list) {
      auto pr = AsIntArray(pair, "prime power");
      if (pr.size() != 2) Malformed("prime powers are [p, r] pairs");
      p.prime_powers.emplace_back(pr[0], static_cast<int>(pr[1]));
    }
    return {p};
  }
  if (variant == "PLATEAUED_C") {
    PlateauedParams p;
    p.h_orders = AsIntArray(Field(j, "H"), "H");
    const FiniteAbelianGroup h = FiniteAbelianGroup::Make(p.h_orders);
    const Json& s1 = Field(j, "S1");
    if (!s1.is_array()) Malformed("\"S1\" must be an array of elements");
    for (const Json& x : s1) p.s1.push_back(ElementFromJson(x, h));
    if (j.contains("p")) p.p = AsInt(j["p"], "p");
    return {p};
  }
  if (variant == "CUBLIKE_D") {
    CublikeParams p;
    for (const char* key : {"S0", "S1"}) {
      const Json& list = Field(j, key);
      if (!list.is_array()) Malformed(std::string("\"") + key + "\" must be an array of bit vectors");
      auto& target = std::string(key) == "S0" ? p.s0 : p.s1;
      for (const Json& v : list) target.push_back(BitVector(v));
    }
    return {p};
  }
  if (variant == "BENT_E") {
    const Json& f = Field(j, "f");
    if (!f.is_string()) Malformed("\"f\" must be a hex truth table");
    std::optional<int> n;
    if (j.contains("n")) n = static_cast<int>(AsInt(j["n"], "n"));
    return {BentParams{BooleanFunction::FromHex(f.get<std::string>(), n)}};
  }
  Malformed("unknown family variant \"" + variant + "\"");
}

GroupFunction GroupFunctionFromJson(const Json& j) {
  FiniteAbelianGroup group = GroupFromJson(Field(j, "group"));
  return GroupFunction(std::move(group), AsIntArray(Field(j, "values"), "values"));
}

}  // namespace fracrev::io
