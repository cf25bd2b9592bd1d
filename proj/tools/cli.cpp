// Copyright 2026 The Redukt Authors.
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "redukt/error.hpp"
#include "redukt/flips.hpp"
#include "redukt/io.hpp"
#include "redukt/pcgraph.hpp"
#include "redukt/redgraph.hpp"
#include "redukt/rules.hpp"
#include "redukt/strings.hpp"

namespace redukt::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultMaxOrbit = 10000;

// Reported with exit status 2.
class NegativeDecision : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "negative"; }
};

struct Options {
  std::string format = "json";
  std::string input;
  std::string second;
  std::string linear;
  std::size_t max_orbit = kDefaultMaxOrbit;
};

std::string ReadSource(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void RequireFormat(const Options& opt, std::initializer_list<const char*> ok) {
  for (const char* f : ok) {
    if (opt.format == f) return;
  }
  throw ParseError("format '" + opt.format + "' is not supported here");
}

void Emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

AbstractReductionGraph ArgFromRaw(const RawGraph& raw) {
  ArgValidation v = ValidateArg(raw);
  if (!v.ok()) {
    std::string msg = "not an abstract reduction graph:";
    for (const auto& s : v.violations) msg += "\n  " + s;
    throw ValidationError(msg);
  }
  return std::move(*v.graph);
}

json PcReport(const PointerComponentGraph& m) {
  json j = ToJson(m);
  j["bridges"] = m.Bridges();
  j["loops"] = m.Loops();
  j["connected"] = IsConnected(m);
  return j;
}

int Build(const Options& opt, std::ostream& out) {
  RequireFormat(opt, {"json", "dot"});
  const RawGraph raw = ToRaw(BuildReductionGraph(ParseLegalString(opt.input)));
  if (opt.format == "dot") {
    out << ToDot(raw);
  } else {
    Emit(out, ToJson(raw));
  }
  return kExitOk;
}

int Extend(const Options& opt, std::ostream& out) {
  RequireFormat(opt, {"json", "dot"});
  const RawGraph raw =
      ToRaw(BuildExtendedReductionGraph(ParseLegalString(opt.input)));
  if (opt.format == "dot") {
    out << ToDot(raw);
  } else {
    Emit(out, ToJson(raw));
  }
  return kExitOk;
}

int Pc(const Options& opt, std::istream& in, std::ostream& out) {
  RequireFormat(opt, {"json", "dot", "text"});
  const bool is_file =
      opt.input == "-" || std::filesystem::is_regular_file(opt.input);
  const AbstractReductionGraph g =
      is_file ? ArgFromRaw(RawGraphFromJson(ParseJson(ReadSource(opt.input, in))))
              : BuildReductionGraph(ParseLegalString(opt.input));
  const PointerComponentGraph m = PointerComponentGraphOf(g);
  if (opt.format == "dot") {
    out << ToDot(m);
  } else if (opt.format == "text") {
    for (const auto& [p, ends] : m.edges()) {
      out << p << ": " << ends.first << " -- " << ends.second << "\n";
    }
    out << "connected: " << (IsConnected(m) ? "yes" : "no") << "\n";
  } else {
    Emit(out, PcReport(m));
  }
  return kExitOk;
}

int CheckRangeCmd(const Options& opt, std::istream& in, std::ostream& out) {
  RequireFormat(opt, {"json", "text"});
  const RangeCheck check =
      CheckRange(RawGraphFromJson(ParseJson(ReadSource(opt.input, in))));
  if (opt.format == "text") {
    out << (check.in_range ? "in range" : "not in range") << "\n";
    for (const auto& r : check.reasons) out << "  " << r << "\n";
  } else {
    Emit(out, {{"in_range", check.in_range}, {"reasons", check.reasons}});
  }
  return check.in_range ? kExitOk : kExitNegative;
}

int Recover(const Options& opt, std::istream& in, std::ostream& out) {
  RequireFormat(opt, {"json", "text"});
  const RawGraph raw = RawGraphFromJson(ParseJson(ReadSource(opt.input, in)));
  const LegalString u = RecoverLegalString(ArgFromRaw(raw));
  if (opt.format == "text") {
    out << FormatLegalString(u) << "\n";
  } else {
    Emit(out, {{"legal_string", FormatLegalString(u)}});
  }
  return kExitOk;
}

int FiberCheck(const Options& opt, std::ostream& out) {
  RequireFormat(opt, {"json", "text"});
  const bool dual = DualEquivalent(ParseLegalString(opt.input),
                                   ParseLegalString(opt.second));
  if (opt.format == "text") {
    out << (dual ? "true" : "false") << "\n";
  } else {
    Emit(out, {{"dual_equivalent", dual}});
  }
  return dual ? kExitOk : kExitNegative;
}

int OrbitCmd(const Options& opt, std::ostream& out) {
  RequireFormat(opt, {"json", "text"});
  std::size_t max = opt.max_orbit;
  if (const char* env = std::getenv("REDUKT_MAX_ORBIT")) {
    try {
      max = std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad REDUKT_MAX_ORBIT value '") + env + "'");
    }
  }
  std::set<LegalString> orbit;
  try {
    orbit = Orbit(ParseLegalString(opt.input), max);
  } catch (const BudgetExceededError& e) {
    throw NegativeDecision(e.what());
  }
  std::vector<std::string> members;
  for (const auto& v : orbit) members.push_back(FormatLegalString(v));
  if (opt.format == "text") {
    for (const auto& m : members) out << m << "\n";
  } else {
    Emit(out, {{"size", members.size()}, {"orbit", members}});
  }
  return kExitOk;
}

int RealizePcCmd(const Options& opt, std::istream& in, std::ostream& out) {
  RequireFormat(opt, {"json", "text"});
  const PointerComponentGraph m =
      MultigraphFromJson(ParseJson(ReadSource(opt.input, in)));
  LegalString w;
  try {
    w = RealizePc(m, opt.linear);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  if (opt.format == "text") {
    out << FormatLegalString(w) << "\n";
  } else {
    Emit(out, {{"legal_string", FormatLegalString(w)}});
  }
  return kExitOk;
}

int Reduce(const Options& opt, std::ostream& out) {
  RequireFormat(opt, {"json", "text"});
  const RuleSequence seq =
      SuccessfulReductionSearch(ParseLegalString(opt.input));
  if (opt.format == "text") {
    out << FormatRuleSequence(seq) << "\n";
  } else {
    std::vector<std::string> rules;
    for (const Rule& r : seq) rules.push_back(FormatRule(r));
    Emit(out, {{"rules", FormatRuleSequence(seq)}, {"sequence", rules}});
  }
  return kExitOk;
}

void ReportError(std::ostream& err, const char* kind, const std::string& what) {
  err << json{{"error", {{"kind", kind}, {"message", what}}}}.dump() << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction graphs of legal strings", "redukt"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_format = [&opt](CLI::App* sub) {
    sub->add_option("--format,-f", opt.format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };
  auto* build = app.add_subcommand("build", "reduction graph of a legal string");
  build->add_option("string", opt.input)->required();
  auto* extend = app.add_subcommand("extend", "extended reduction graph");
  extend->add_option("string", opt.input)->required();
  auto* pc = app.add_subcommand("pc", "pointer-component graph and bridges");
  pc->add_option("input", opt.input, "graph JSON file or legal string")
      ->required();
  auto* check = app.add_subcommand("check-range",
                                   "is the graph isomorphic to a reduction graph?");
  check->add_option("graph", opt.input, "graph JSON file ('-' for stdin)")
      ->required();
  auto* recover = app.add_subcommand("recover", "legal string with this graph");
  recover->add_option("graph", opt.input, "graph JSON file ('-' for stdin)")
      ->required();
  auto* fiber = app.add_subcommand("fiber-check",
                                   "do two strings share a reduction graph?");
  fiber->add_option("u", opt.input)->required();
  fiber->add_option("v", opt.second)->required();
  auto* orbit = app.add_subcommand("orbit", "dual-rule orbit of a string");
  orbit->add_option("string", opt.input)->required();
  orbit->add_option("--max", opt.max_orbit, "orbit size limit")
      ->default_val(kDefaultMaxOrbit);
  auto* realize = app.add_subcommand("realize-pc",
                                     "legal string with a given pointer-component graph");
  realize->add_option("multigraph", opt.input, "multigraph JSON file")
      ->required();
  realize->add_option("--linear", opt.linear, "node holding s and t")
      ->required();
  auto* reduce = app.add_subcommand("reduce", "a successful reduction");
  reduce->add_option("string", opt.input)->required();
  for (auto* sub : {build, extend, pc, check, recover, fiber, orbit, realize,
                    reduce}) {
    add_format(sub);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ReportError(err, "usage", e.what());
    return kExitMalformed;
  }

  try {
    if (*build) return Build(opt, out);
    if (*extend) return Extend(opt, out);
    if (*pc) return Pc(opt, in, out);
    if (*check) return CheckRangeCmd(opt, in, out);
    if (*recover) return Recover(opt, in, out);
    if (*fiber) return FiberCheck(opt, out);
    if (*orbit) return OrbitCmd(opt, out);
    if (*realize) return RealizePcCmd(opt, in, out);
    if (*reduce) return Reduce(opt, out);
  } catch (const NegativeDecision& e) {
    ReportError(err, e.kind(), e.what());
    return kExitNegative;
  } catch (const NotInRangeError& e) {
    ReportError(err, e.kind(), e.what());
    return kExitNegative;
  } catch (const Error& e) {
    ReportError(err, e.kind(), e.what());
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace redukt::cli
