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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "fracrev/boolean.hpp"
#include "fracrev/constructions.hpp"
#include "fracrev/error.hpp"
#include "fracrev/fr_engine.hpp"
#include "fracrev/io.hpp"
#include "fracrev/oracle.hpp"

namespace fracrev::cli {

namespace {

using io::Json;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidElement:
      return kExitParse;
    case ErrorCode::kHypothesis:
      return kExitHypothesis;
    default:
      return kExitValidation;
  }
}

struct Output {
  std::string path;
  std::ostream& stdout_stream;

  void Write(const Json& j) const {
    const std::string text = io::Dump(j);
    if (path.empty()) {
      stdout_stream << text;
      return;
    }
    WriteFile(path, text);
  }

  static void WriteFile(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + path);
    file << text;
  }
};

GroupElement ParseElementList(const std::string& text, const FiniteAbelianGroup& group) {
  std::vector<Int> coords;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "--a expects comma-separated integers, got \"" + text + "\"");
    }
  }
  if (coords.size() != group.rank()) {
    throw Error(ErrorCode::kParse, "--a needs " + std::to_string(group.rank()) + " coordinates");
  }
  return group.Normalize(std::move(coords));
}

void WarnIfDisconnected(const CayleyGraph& graph, std::ostream& err) {
  if (!graph.connected()) err << "warning: disconnected (S does not generate G)\n";
}

int CmdSpectrum(const std::string& spec, const Output& out, std::ostream& err) {
  const CayleyGraph graph = io::GraphFromJson(io::ReadFile(spec));
  WarnIfDisconnected(graph, err);
  const Spectrum spectrum = ComputeSpectrum(graph);
  Json j = io::ToJson(graph, spectrum);
  j["warnings"] = graph.connected() ? Json::array() : Json::array({"disconnected"});
  out.Write(j);
  return kExitOk;
}

int CmdSearch(const std::string& spec, const Output& out, std::ostream& err) {
  const CayleyGraph graph = io::GraphFromJson(io::ReadFile(spec));
  WarnIfDisconnected(graph, err);
  Json certs = Json::array();
  bool any_fr = false;
  for (const auto& [a, w] : SearchAll(graph)) {
    certs.push_back(io::ToJson(w));
    any_fr = any_fr || w.kind == RevivalKind::kFractionalRevival;
  }
  out.Write(Json{{"graph", io::ToJson(graph)}, {"certificates", std::move(certs)}});
  return any_fr ? kExitOk : kExitNegative;
}

int CmdCheck(const std::string& spec, const std::string& a_text, const Output& out, std::ostream& err) {
  const CayleyGraph graph = io::GraphFromJson(io::ReadFile(spec));
  WarnIfDisconnected(graph, err);
  const GroupElement a = ParseElementList(a_text, graph.group());
  const auto w = DecideFR(graph, a);
  out.Write(Json{{"a", io::ToJson(a)}, {"certificate", w ? io::ToJson(*w) : Json(nullptr)}});
  return w && w->kind == RevivalKind::kFractionalRevival ? kExitOk : kExitNegative;
}

int CmdConstruct(const std::string& family, const std::string& graph_out, const std::string& cert_out,
                 const Output& out) {
  const Construction c = Build(io::FamilyFromJson(io::ReadFile(family)));
  const Json graph = io::ToJson(c.graph);
  const Json prediction = io::ToJson(c.predicted);
  if (!graph_out.empty()) Output::WriteFile(graph_out, io::Dump(graph));
  if (!cert_out.empty()) Output::WriteFile(cert_out, io::Dump(prediction));
  out.Write(Json{{"graph", graph}, {"prediction", prediction}});
  return kExitOk;
}

int CmdVerify(const std::string& spec, const std::string& cert, double tol, const Output& out) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kParse, "--tol must be positive");
  const CayleyGraph graph = io::GraphFromJson(io::ReadFile(spec));
  const Json doc = io::ReadFile(cert);

  std::vector<Json> certs;
  if (doc.is_object() && doc.contains("certificates")) {
    for (const Json& c : doc["certificates"]) certs.push_back(c);
  } else if (doc.is_object() && doc.contains("prediction")) {
    certs.push_back(doc["prediction"]);
  } else if (doc.is_object() && doc.contains("certificate")) {
    certs.push_back(doc["certificate"]);
  } else {
    certs.push_back(doc);
  }
  if (certs.empty() || certs.front().is_null()) throw Error(ErrorCode::kParse, "no certificate to verify");

  bool all_pass = true;
  Json reports = Json::array();
  for (const Json& c : certs) {
    const FRWitness w = io::WitnessFromJson(c, graph.group());
    const VerificationReport report = VerifyFR(graph, w, tol);
    all_pass = all_pass && report.pass;
    Json r = io::ToJson(report);
    r["a"] = io::ToJson(w.a);
    r["kind"] = ToString(w.kind);
    reports.push_back(std::move(r));
  }
  if (reports.size() == 1) {
    out.Write(reports.front());
  } else {
    out.Write(Json{{"pass", all_pass}, {"reports", std::move(reports)}});
  }
  return all_pass ? kExitOk : kExitNegative;
}

int CmdBoolfn(const std::string& hex, std::optional<int> n, bool report, const Output& out) {
  const BooleanFunction f = BooleanFunction::FromHex(hex, n);
  const BooleanClass cls = Classify(f);
  Json j{{"n", f.arity()}, {"truth_table", f.ToHex()}, {"class", ToString(cls)}, {"walsh", WalshTransform(f)}};
  if (report) {
    Json support = Json::array();
    for (std::size_t x : Support(f)) support.push_back(BitString(x, f.arity()));
    j["support_size"] = support.size();
    j["support"] = std::move(support);
    j["eigenvalues"] = EigenvaluesFromWalsh(f);
    if (cls == BooleanClass::kBent) j["bent_support_size_check"] = SupportSizeCheck(f);
  }
  out.Write(j);
  return kExitOk;
}

int CmdPlateaued(const std::string& path, Int p, const Output& out) {
  const GroupFunction f = io::GroupFunctionFromJson(io::ReadFile(path));
  Json j{{"group", io::ToJson(f.group)}, {"p", p}, {"class_function", IsClassFunction(f)}};
  if (!IsClassFunction(f)) {
    j["fourier"] = nullptr;
    j["plateaued"] = nullptr;
    out.Write(j);
    return kExitValidation;
  }
  Json fourier = Json::array();
  for (const RootOfUnitySum& v : GroupFourier(f)) fourier.push_back(*AsInteger(v));
  j["fourier"] = std::move(fourier);
  const auto level = PlateauedLevel(f, p);
  j["plateaued"] = level ? Json{{"k", level->residue}, {"r", level->r}} : Json(nullptr);
  out.Write(j);
  return level ? kExitOk : kExitNegative;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional revival on abelian Cayley graphs", "fr"};
  app.require_subcommand(1);
  std::string output;
  app.add_option("-o,--output", output, "Write JSON here instead of stdout");

  std::string spec, cert, family, a_text, hex, groupfn, graph_out, cert_out;
  double tol = kVerifyTolerance;
  std::optional<int> arity;
  bool report = false;
  Int prime = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum of a graph spec");
  spectrum->add_option("spec", spec, "Graph spec JSON")->required();

  auto* search = app.add_subcommand("search", "Classify every involution (exit 0 iff FR found)");
  search->add_option("spec", spec, "Graph spec JSON")->required();

  auto* check = app.add_subcommand("check", "Decide FR between x and x + a");
  check->add_option("spec", spec, "Graph spec JSON")->required();
  check->add_option("--a", a_text, "Involution, comma-separated coordinates")->required();

  auto* construct = app.add_subcommand("construct", "Build a graph family and its predicted certificate");
  construct->add_option("family", family, "Family spec JSON")->required();
  construct->add_option("--graph-out", graph_out, "Also write the graph spec here");
  construct->add_option("--cert-out", cert_out, "Also write the predicted certificate here");

  auto* verify = app.add_subcommand("verify", "Check a certificate numerically (exit 0 iff pass)");
  verify->add_option("spec", spec, "Graph spec JSON")->required();
  verify->add_option("cert", cert, "Certificate JSON")->required();
  verify->add_option("--tol", tol, "Max entrywise deviation");

  auto* boolfn = app.add_subcommand("boolfn", "Walsh spectrum and bent/semi-bent class of a Boolean function");
  boolfn->add_option("--truth-table", hex, "Hex truth table, little-endian bit order")->required();
  boolfn->add_option("--n", arity, "Arity (needed when 2^n < 4)");
  boolfn->add_flag("--report", report, "Include support and Cayley eigenvalues");

  auto* plateaued = app.add_subcommand("plateaued", "Fourier spectrum and p^r-plateau level of a group function");
  plateaued->add_option("groupfn", groupfn, "Group function JSON")->required();
  plateaued->add_option("--p", prime, "Prime p")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  const Output sink{output, out};
  try {
    if (*spectrum) return CmdSpectrum(spec, sink, err);
    if (*search) return CmdSearch(spec, sink, err);
    if (*check) return CmdCheck(spec, a_text, sink, err);
    if (*construct) return CmdConstruct(family, graph_out, cert_out, sink);
    if (*verify) return CmdVerify(spec, cert, tol, sink);
    if (*boolfn) return CmdBoolfn(hex, arity, report, sink);
    if (*plateaued) return CmdPlateaued(groupfn, prime, sink);
  } catch (const Error& e) {
    err << "error (" << ToString(e.code()) << "): " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return kExitParse;
}

}  // namespace fracrev::cli
