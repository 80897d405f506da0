// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: programs, the dense oracle and stabiliser codes.
//
// Exit codes: 0 success / equivalent / true, 1 inequivalent / false,
// 2 user error (I/O, syntax, typing, bad modulus), 3 resource budget exceeded.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "stabrel/error.hpp"
#include "stabrel/oracle/channel.hpp"
#include "stabrel/qec.hpp"
#include "stabrel/spl/denote.hpp"
#include "stabrel/spl/parser.hpp"
#include "stabrel/spl/typecheck.hpp"

namespace {

using namespace stabrel;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUserError = 2;
constexpr int kResource = 3;

struct Flags {
  std::int64_t p = 3;
  bool nl = false;
  bool json = false;
  bool positional = false;
  std::size_t budget = kDefaultDistanceBudget;
  std::size_t cap = 729;
  double tol = 1e-9;
};

// Errors that carry the file they came from.
struct FileError {
  std::string file;
  std::string message;
  bool resource = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{path, "cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
auto in_file(const std::string& path, F f) {
  try {
    return f();
  } catch (const ResourceError& e) {
    throw FileError{path, e.what(), true};
  } catch (const Error& e) {
    throw FileError{path, e.what()};
  }
}

spl::Judgment load_program(const std::string& path, const Flags& fl) {
  const auto src = read_file(path);
  return in_file(path, [&] { return spl::typecheck(spl::parse(src, {fl.nl}), Prime(fl.p)); });
}

StabiliserCode load_code(const std::string& path, const Flags& fl) {
  const auto src = read_file(path);
  return in_file(path, [&] { return parse_code(src, Prime(fl.p)); });
}

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::string wire_list(const std::vector<std::pair<std::string, spl::RegType>>& regs) {
  std::string s;
  for (const auto& [n, t] : regs) s += (s.empty() ? "" : ", ") + n + ":" + spl::to_string(t);
  return "{" + s + "}";
}

void print_morphism(const ArqMorphism& m, const std::string& dom_names, const std::string& cod_names) {
  std::cout << "dom " << to_string(m.dom()) << ' ' << dom_names << '\n';
  std::cout << "cod " << to_string(m.cod()) << ' ' << cod_names << '\n';
  for (const auto& b : m.bodies()) std::cout << "  " << to_string(b) << '\n';
}

nlohmann::ordered_json env_json(const std::vector<std::pair<std::string, spl::RegType>>& regs) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& [n, t] : regs) a.push_back({{"name", n}, {"type", spl::to_string(t)}});
  return a;
}

int cmd_check(const std::string& file, const Flags& fl) {
  const auto j = load_program(file, fl);
  if (fl.json) {
    print_json({{"input", env_json(j.input.entries())}, {"output", env_json(j.output.entries())}});
  } else {
    std::cout << "ok: " << wire_list(j.input.entries()) << " -> " << wire_list(j.output.entries()) << '\n';
  }
  return kOk;
}

int cmd_denote(const std::string& file, const Flags& fl) {
  const auto j = load_program(file, fl);
  const auto m = in_file(file, [&] { return spl::denote(j, {fl.budget}); });
  if (fl.json) {
    auto out = to_json(m);
    out["dom_registers"] = env_json(j.input.entries());
    out["cod_registers"] = env_json(j.output.sorted());
    print_json(out);
  } else {
    print_morphism(m, wire_list(j.input.entries()), wire_list(j.output.sorted()));
  }
  return kOk;
}

int cmd_equiv(const std::string& a, const std::string& b, const Flags& fl) {
  const auto ja = load_program(a, fl);
  const auto jb = load_program(b, fl);
  const auto r = in_file(a, [&] { return spl::equivalent(ja, jb, {fl.positional, fl.budget}); });
  if (fl.json) {
    print_json({{"verdict", spl::to_string(r.verdict)}, {"detail", r.detail}, {"conjectural", r.conjectural}});
  } else {
    std::cout << (r.conjectural && r.verdict == spl::Verdict::Equivalent ? "conjecturally equivalent"
                                                                         : spl::to_string(r.verdict));
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << '\n';
  }
  return r.verdict == spl::Verdict::Equivalent ? kOk : kFalse;
}

oracle::DenseChannel simulate(const std::string& file, const Flags& fl) {
  const auto j = load_program(file, fl);
  return in_file(file, [&] { return oracle::run(j, {fl.cap}); });
}

int cmd_run(const std::string& file, const Flags& fl) {
  const auto c = simulate(file, fl);
  if (fl.json) {
    print_json(oracle::to_json(c));
    return kOk;
  }
  auto wires = [](const std::vector<oracle::ChannelWire>& ws) {
    std::string s;
    for (const auto& w : ws) s += (s.empty() ? "" : ", ") + w.name + ":" + to_string(w.sort);
    return "{" + s + "}";
  };
  std::cout << "channel " << wires(c.inputs) << " -> " << wires(c.outputs) << '\n';
  std::cout << "choi dimension " << c.choi.rows() << ", trace " << c.choi.trace().real() << '\n';
  std::cout << "cptp " << (oracle::is_cptp(c, fl.tol) ? "yes" : "no") << '\n';
  return kOk;
}

int cmd_choi(const std::string& file, const Flags& fl) {
  print_json(oracle::to_json(simulate(file, fl)));
  return kOk;
}

FVector error_vector(const std::string& text, const StabiliserCode& code) {
  return in_file("<pauli>", [&] { return parse_pauli(text, code.prime(), code.qupits()).vector(); });
}

std::string distance_text(const DistanceResult& d) {
  return d.distance ? std::to_string(*d.distance) : "none (" + d.reason + ")";
}

int cmd_qec_analyze(const std::string& file, const Flags& fl) {
  const auto code = load_code(file, fl);
  auto j = to_json(code);
  if (code.is_empty()) {
    if (fl.json)
      print_json(j);
    else
      std::cout << "zero projector: the generators' phases are contradictory\n";
    return kOk;
  }
  std::string dist;
  try {
    const auto d = distance(code, fl.budget);
    j["distance"] = d.distance ? nlohmann::ordered_json(*d.distance) : nlohmann::ordered_json(nullptr);
    dist = distance_text(d);
  } catch (const ResourceError& e) {
    j["distance"] = nullptr;
    j["distance_error"] = e.what();
    dist = std::string("not computed: ") + e.what();
  }
  if (fl.json) {
    print_json(j);
    return kOk;
  }
  std::cout << "qupits " << code.qupits() << '\n';
  std::cout << "logical qupits " << code.logical_qupits() << '\n';
  std::cout << "generators";
  const auto group = code.generators();
  for (const auto& g : group.generators()) std::cout << "\n  " << print_pauli(g);
  std::cout << "\ndistance " << dist << '\n';
  return kOk;
}

int cmd_qec_distance(const std::string& file, const Flags& fl) {
  const auto code = load_code(file, fl);
  const auto d = in_file(file, [&] { return distance(code, fl.budget); });
  if (fl.json) {
    print_json({{"distance", d.distance ? nlohmann::ordered_json(*d.distance) : nlohmann::ordered_json(nullptr)},
                {"reason", d.reason},
                {"visited", d.visited}});
  } else {
    std::cout << distance_text(d) << '\n';
  }
  return kOk;
}

int cmd_qec_classify(const std::string& file, const std::string& pauli, const Flags& fl) {
  const auto code = load_code(file, fl);
  const auto e = error_vector(pauli, code);
  const auto c = in_file(file, [&] { return classify_error(code, e); });
  if (fl.json)
    print_json({{"error", pauli}, {"class", to_string(c)}});
  else
    std::cout << to_string(c) << '\n';
  return kOk;
}

int cmd_qec_correctable(const std::string& file, const std::vector<std::string>& paulis, const Flags& fl) {
  const auto code = load_code(file, fl);
  std::vector<FVector> errs;
  for (const auto& s : paulis) errs.push_back(error_vector(s, code));
  const bool ok = in_file(file, [&] { return is_correctable(code, errs); });
  if (fl.json)
    print_json({{"correctable", ok}});
  else
    std::cout << (ok ? "correctable" : "not correctable") << '\n';
  return ok ? kOk : kFalse;
}

int cmd_qec_encoder(const std::string& file, const Flags& fl) {
  const auto code = load_code(file, fl);
  const auto m = in_file(file, [&] { return encoder(code); });
  if (fl.json)
    print_json(to_json(m));
  else
    print_morphism(m, "", "");
  return kOk;
}

int cmd_qec_refines(const std::string& a, const std::string& b, const Flags& fl) {
  const auto ca = load_code(a, fl);
  const auto cb = load_code(b, fl);
  const bool r = in_file(a, [&] { return refines(ca, cb); });
  if (fl.json)
    print_json({{"refines", r}});
  else
    std::cout << (r ? "refines" : "does not refine") << '\n';
  return r ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabiliser programs as affine relations"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags fl;
  app.add_option("--p", fl.p, "Odd prime modulus")->capture_default_str();
  app.add_flag("--nl", fl.nl, "Accept the nonlinear mul statement");
  app.add_flag("--json", fl.json, "Machine-readable output");
  app.add_option("--budget", fl.budget, "Point budget for enumerations")->capture_default_str();
  app.add_option("--cap", fl.cap, "Dimension cap of the dense oracle")->capture_default_str();
  app.add_option("--tol", fl.tol, "Numerical tolerance")->capture_default_str();
  app.add_flag("--positional", fl.positional, "equiv: match wires by position instead of by name");

  std::function<int()> action;
  std::string f1, f2, pauli;
  std::vector<std::string> paulis;

  auto* check = app.add_subcommand("check", "Parse and type-check a program");
  check->add_option("file", f1)->required();
  check->callback([&] { action = [&] { return cmd_check(f1, fl); }; });

  auto* den = app.add_subcommand("denote", "Print the relation denoted by a program");
  den->add_option("file", f1)->required();
  den->callback([&] { action = [&] { return cmd_denote(f1, fl); }; });

  auto* eq = app.add_subcommand("equiv", "Decide observational equivalence of two programs");
  eq->add_option("first", f1)->required();
  eq->add_option("second", f2)->required();
  eq->callback([&] { action = [&] { return cmd_equiv(f1, f2, fl); }; });

  auto* run = app.add_subcommand("run", "Simulate a program densely");
  run->add_option("file", f1)->required();
  run->callback([&] { action = [&] { return cmd_run(f1, fl); }; });

  auto* choi = app.add_subcommand("choi", "Dump the Choi matrix of a program as JSON");
  choi->add_option("file", f1)->required();
  choi->callback([&] { action = [&] { return cmd_choi(f1, fl); }; });

  auto* qec = app.add_subcommand("qec", "Stabiliser code analysis");
  qec->require_subcommand(1);
  qec->fallthrough();
  auto* analyze = qec->add_subcommand("analyze", "Generators, logical qupits and distance");
  analyze->add_option("code", f1)->required();
  analyze->callback([&] { action = [&] { return cmd_qec_analyze(f1, fl); }; });
  auto* dist = qec->add_subcommand("distance", "Code distance by enumeration");
  dist->add_option("code", f1)->required();
  dist->callback([&] { action = [&] { return cmd_qec_distance(f1, fl); }; });
  auto* cls = qec->add_subcommand("classify", "Classify a Pauli error");
  cls->add_option("code", f1)->required();
  cls->add_option("pauli", pauli)->required();
  cls->callback([&] { action = [&] { return cmd_qec_classify(f1, pauli, fl); }; });
  auto* corr = qec->add_subcommand("correctable", "Check that a set of errors is correctable");
  corr->add_option("code", f1)->required();
  corr->add_option("pauli", paulis)->required();
  corr->callback([&] { action = [&] { return cmd_qec_correctable(f1, paulis, fl); }; });
  auto* enc = qec->add_subcommand("encoder", "Encoder relation of a code");
  enc->add_option("code", f1)->required();
  enc->callback([&] { action = [&] { return cmd_qec_encoder(f1, fl); }; });
  auto* ref = qec->add_subcommand("refines", "Check that the first code refines the second");
  ref->add_option("first", f1)->required();
  ref->add_option("second", f2)->required();
  ref->callback([&] { action = [&] { return cmd_qec_refines(f1, f2, fl); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUserError;
  }

  try {
    Prime(fl.p);
    return action();
  } catch (const FileError& e) {
    std::cerr << e.file << ": " << e.message << '\n';
    return e.resource ? kResource : kUserError;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUserError;
  }
}
