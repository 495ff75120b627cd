// Copyright 2026 The rlamalg Authors.
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


// rlamalg command-line driver. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rlamalg/rlamalg.h"

#ifndef RLAMALG_FIXTURE_DIR
#define RLAMALG_FIXTURE_DIR "fixtures"
#endif

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitNone = 10;
constexpr int kExitBudget = 20;

struct CliError {
  int code;
};

// Owns a string returned by the library.
struct Text {
  char* ptr = nullptr;
  ~Text() { rla_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

void Check(rla_status status) {
  if (status == RLA_OK) return;
  std::cerr << "error: " << rla_status_name(status) << ": " << rla_last_error() << "\n";
  throw CliError{kExitInput};
}

struct AlgebraDeleter {
  void operator()(rla_algebra* a) const { rla_algebra_free(a); }
};
struct SpanDeleter {
  void operator()(rla_span* s) const { rla_span_free(s); }
};
using AlgebraPtr = std::unique_ptr<rla_algebra, AlgebraDeleter>;
using SpanPtr = std::unique_ptr<rla_span, SpanDeleter>;

AlgebraPtr LoadAlgebra(const std::string& path) {
  rla_algebra* a = nullptr;
  Check(rla_algebra_load(path.c_str(), &a));
  return AlgebraPtr(a);
}

std::uint64_t DefaultBudget(std::uint64_t fallback) {
  const char* env = std::getenv("RLAMALG_BUDGET");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  std::cerr << "error: RLAMALG_BUDGET must be a positive integer\n";
  throw CliError{kExitInput};
}

std::string Digest(const std::vector<std::string>& paths) {
  std::vector<const char*> raw;
  for (const auto& p : paths) raw.push_back(p.c_str());
  Text t;
  Check(rla_digest_files(raw.data(), raw.size(), &t.ptr));
  return t.str();
}

std::string Report(const std::string& command, const std::string& digest, const Json& outcome,
                   const Json& stats) {
  Text t;
  Check(rla_run_report(command.c_str(), digest.c_str(), outcome.dump().c_str(),
                       stats.dump().c_str(), &t.ptr));
  return t.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw CliError{kExitInput};
  }
}

// Emits the run report: to stdout when --json, to `report_path` if set.
void Emit(bool json, const std::string& report_path, const std::string& report) {
  if (json) std::cout << report;
  if (!report_path.empty()) WriteFile(report_path, report);
}

std::string MapText(const Json& map) {
  std::string s = "[";
  for (std::size_t i = 0; i < map.size(); ++i) s += (i ? ", " : "") + map[i].dump();
  return s + "]";
}

struct Common {
  bool json = false;
  std::string report;
};

void AddCommon(CLI::App* cmd, Common& c) {
  cmd->add_flag("--json", c.json, "Print the machine-readable report only");
  cmd->add_option("--report", c.report, "Also write the run report to FILE");
}

// ---- check ----

int RunCheck(const std::string& file, const Common& c) {
  int passed = 0;
  Text t;
  Check(rla_check_file(file.c_str(), &passed, &t.ptr));
  const Json result = Json::parse(t.str());
  Emit(c.json, c.report, Report("check", Digest({file}), result, Json::object()));
  if (!c.json) {
    std::cout << result["name"].get<std::string>() << ": size " << result["size"] << ", "
              << (passed ? "residuated lattice" : "not a residuated lattice") << "\n";
    for (const auto& v : result["violations"]) {
      std::cout << "  violated " << v["axiom"].get<std::string>() << " at "
                << MapText(v["witness"]) << "\n";
    }
    if (passed) {
      for (const auto& [name, value] : result["predicates"].items()) {
        std::cout << "  " << name << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
      }
      for (const char* key : {"central", "idempotent_elements"}) {
        std::cout << "  " << key << ":";
        for (const auto& l : result[key]) std::cout << " " << l.get<std::string>();
        std::cout << "\n";
      }
      if (result.contains("hasse")) std::cout << result["hasse"].get<std::string>();
    }
  }
  return passed ? kExitOk : kExitNegative;
}

// ---- complete ----

int RunComplete(const std::string& file, std::size_t limit, const std::string& out,
                const Common& c) {
  std::size_t count = 0;
  Text t;
  Check(rla_complete_file(file.c_str(), limit, &count, &t.ptr));
  const Json list = Json::parse(t.str());
  Json outcome = {{"completions", count}, {"limit", limit}};
  Emit(c.json, c.report, Report("complete", Digest({file}), outcome, Json::object()));
  if (!c.json) {
    std::cout << count << (count == limit ? "+" : "") << " completion(s)\n";
    for (const auto& a : list) std::cout << a.get<std::string>();
  }
  if (!out.empty() && count == 1) WriteFile(out, list[0].get<std::string>());
  return count == 1 ? kExitOk : kExitNegative;
}

// ---- embed ----

int RunEmbed(const std::string& from, const std::string& to, std::uint64_t budget,
             const Common& c) {
  const AlgebraPtr a = LoadAlgebra(from);
  const AlgebraPtr b = LoadAlgebra(to);
  std::size_t count = 0;
  Text t;
  Check(rla_embeddings(a.get(), b.get(), budget, &count, &t.ptr));
  const Json maps = Json::parse(t.str());
  Emit(c.json, c.report,
       Report("embed", Digest({from, to}), {{"embeddings", maps}}, Json::object()));
  if (!c.json) {
    std::cout << count << " embedding(s)\n";
    for (const auto& m : maps) std::cout << "  " << MapText(m) << "\n";
  }
  return count > 0 ? kExitOk : kExitNegative;
}

// ---- amalgamate ----

struct AmalgamateArgs {
  std::string span;
  int max_size = 8;
  std::uint64_t budget = 0;
  std::string flags;
  std::string mode = "seeded";
  int threads = 1;
  bool stats = false;
  std::string out;
};

int RunAmalgamate(const AmalgamateArgs& args, const Common& c) {
  rla_span* raw = nullptr;
  Check(rla_span_load(args.span.c_str(), &raw));
  const SpanPtr span(raw);
  rla_search_options options;
  rla_search_options_init(&options);
  options.max_size = args.max_size;
  options.budget = args.budget;
  options.threads = args.threads;
  options.mode = args.mode == "square" ? RLA_MODE_SQUARE : RLA_MODE_SEEDED;
  options.flags = args.flags.c_str();
  rla_outcome kind = RLA_NONE_UP_TO_BOUND;
  double wall_ms = 0;
  Text t;
  Check(rla_amalgamate(span.get(), &options, &kind, &t.ptr, &wall_ms));
  const Json outcome = Json::parse(t.str());
  Text digest;
  Check(rla_digest_span(args.span.c_str(), &digest.ptr));
  Emit(c.json, c.report, Report("amalgamate", digest.str(), outcome, outcome["stats"]));
  if (!args.out.empty() && outcome.contains("amalgam")) {
    WriteFile(args.out, outcome["amalgam"].dump(2) + "\n");
  }
  if (!c.json) {
    const Json& s = outcome["stats"];
    std::cout << outcome["outcome"].get<std::string>();
    if (kind == RLA_FOUND) {
      std::cout << " at size " << outcome["size"];
    } else if (kind == RLA_NONE_UP_TO_BOUND) {
      std::cout << "(" << outcome["bound"] << ")";
    }
    std::cout << "\n";
    if (kind == RLA_FOUND) {
      std::cout << "  psi_B: " << MapText(outcome["amalgam"]["psi_B"]) << "\n"
                << "  psi_C: " << MapText(outcome["amalgam"]["psi_C"]) << "\n";
    }
    if (args.stats) {
      std::cout << "  sizes " << s["first_size"] << ".." << s["last_size"] << ", nodes "
                << s["nodes"] << ", propagation failures " << s["propagation_failures"]
                << ", lattices " << s["lattices"] << ", " << std::fixed << std::setprecision(1)
                << wall_ms << " ms\n";
    }
  }
  switch (kind) {
    case RLA_FOUND: return kExitOk;
    case RLA_NONE_UP_TO_BOUND: return kExitNone;
    default: return kExitBudget;
  }
}

// ---- enumerate ----

struct EnumerateState {
  std::string dir;
  int size = 0;
  std::size_t written = 0;
  bool failed = false;
};

int WriteEnumerated(const char* text, void* user) {
  auto* state = static_cast<EnumerateState*>(user);
  ++state->written;
  if (state->dir.empty()) return 1;
  std::ostringstream name;
  name << "rl-" << state->size << "-" << std::setw(5) << std::setfill('0') << state->written
       << ".alg";
  std::ofstream out(std::filesystem::path(state->dir) / name.str(), std::ios::binary);
  out << text;
  if (!out) {
    state->failed = true;
    return 0;
  }
  return 1;
}

int RunEnumerate(int size, const std::string& flags, const std::string& dir,
                 std::uint64_t budget, const Common& c) {
  EnumerateState state{dir, size, 0, false};
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::size_t count = 0;
  Check(rla_enumerate(size, flags.c_str(), budget, WriteEnumerated, &state, &count));
  if (state.failed) {
    std::cerr << "error: cannot write into " << dir << "\n";
    return kExitInput;
  }
  Json outcome = {{"size", size}, {"flags", flags.empty() ? "none" : flags}, {"count", count}};
  Emit(c.json, c.report, Report("enumerate", Digest({}), outcome, Json::object()));
  if (!c.json) {
    std::cout << count << " residuated lattice(s) of size " << size << " up to isomorphism";
    if (!dir.empty()) std::cout << ", written to " << dir;
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- span-hunt ----

struct HuntState {
  std::ofstream* log = nullptr;
  bool quiet = false;
  std::size_t examined = 0;
  std::size_t candidates = 0;
  std::int64_t last_cursor = -1;
};

int OnHuntRecord(const char* text, void* user) {
  auto* state = static_cast<HuntState*>(user);
  const Json r = Json::parse(text);
  ++state->examined;
  state->last_cursor = r["cursor"];
  if (state->log) {
    *state->log << text << "\n";
    state->log->flush();
  }
  if (r["candidate"].get<bool>()) {
    ++state->candidates;
    if (!state->quiet) {
      std::cout << "candidate " << r["cursor"] << ": apex " << r["apex"][0] << "#"
                << r["apex"][1] << ", B " << r["B"][0] << "#" << r["B"][1] << " via "
                << MapText(r["phi_B"]) << ", C " << r["C"][0] << "#" << r["C"][1] << " via "
                << MapText(r["phi_C"]) << ": " << r["outcome"].get<std::string>() << "\n";
    }
  }
  return 1;
}

std::int64_t LastCursor(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw CliError{kExitInput};
  }
  std::int64_t cursor = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      cursor = Json::parse(line).at("cursor").get<std::int64_t>();
    } catch (const std::exception&) {
      std::cerr << "error: " << path << ": malformed record, field 'cursor'\n";
      throw CliError{kExitInput};
    }
  }
  return cursor;
}

struct HuntArgs {
  rla_hunt_options options;
  std::string flags;
  std::string log;
  std::string resume;
};

int RunHunt(HuntArgs& args, const Common& c) {
  std::string log_path = args.log;
  if (!args.resume.empty()) {
    args.options.resume_after = LastCursor(args.resume);
    if (log_path.empty()) log_path = args.resume;
  }
  std::ofstream log;
  HuntState state;
  state.quiet = c.json;
  if (!log_path.empty()) {
    log.open(log_path, std::ios::app);
    if (!log) {
      std::cerr << "error: cannot append to " << log_path << "\n";
      return kExitInput;
    }
    state.log = &log;
  }
  args.options.flags = args.flags.c_str();
  Check(rla_span_hunt(&args.options, OnHuntRecord, &state));
  Json outcome = {{"examined", state.examined},
                  {"candidates", state.candidates},
                  {"last_cursor", state.last_cursor}};
  Json settings = {{"apex_max", args.options.apex_max},
                   {"leg_max", args.options.leg_max},
                   {"search_bound", args.options.search_bound},
                   {"flags", args.flags.empty() ? "none" : args.flags},
                   {"resume_after", args.options.resume_after}};
  if (c.json) {
    std::cout << Report("span-hunt", Digest({}), outcome, settings);
  } else {
    std::cout << state.examined << " span(s) examined, " << state.candidates
              << " candidate(s)\n";
  }
  return kExitOk;
}

// ---- certify ----

int RunCertify(const std::string& span, const std::string& cert, const std::string& flags,
               bool flags_given, const Common& c) {
  int valid = 0;
  Text t;
  Check(rla_certify(cert.c_str(), span.empty() ? nullptr : span.c_str(),
                    flags_given ? flags.c_str() : nullptr, &valid, &t.ptr));
  const Json result = Json::parse(t.str());
  std::vector<std::string> inputs = {cert};
  if (!span.empty()) inputs.push_back(span);
  Emit(c.json, c.report, Report("certify", Digest(inputs), result, Json::object()));
  if (!c.json) {
    if (valid) {
      std::cout << "Valid (" << result["steps"] << " steps)\n";
    } else {
      std::cout << "InvalidStep(" << result["step"] << "): "
                << result["reason"].get<std::string>() << "\n";
    }
  }
  return valid ? kExitOk : kExitNegative;
}

// ---- fixtures ----

int RunFixtures(const std::string& dir, bool search, int threads, const Common& c) {
  int passed = 0;
  Text t;
  Check(rla_fixtures_verify(dir.c_str(), search ? 1 : 0, threads, &passed, &t.ptr));
  const Json report = Json::parse(t.str());
  Emit(c.json, c.report,
       Report("fixtures", Digest({(std::filesystem::path(dir) / "manifest.json").string()}),
              report, Json::object()));
  if (!c.json) {
    for (const auto& item : report["items"]) {
      std::cout << (item["passed"].get<bool>() ? "PASS " : "FAIL ")
                << item["kind"].get<std::string>() << " " << item["file"].get<std::string>()
                << ": " << item["detail"].get<std::string>() << "\n";
    }
    const Json& s = report["summary"];
    auto line = [&](const char* kind, const char* what) {
      std::cout << s[kind]["passed"] << "/" << s[kind]["total"] << " " << what << "\n";
    };
    line("algebra", "algebras passed");
    line("span", "spans valid");
    if (search) line("search", "searches NoneUpToBound");
    line("certificate", "certificates Valid");
  }
  return passed ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite residuated lattices: construction, amalgam search, certificates"};
  app.set_version_flag("--version", rla_version());
  app.require_subcommand(1);

  Common common;
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "Verify an algebra file and render it");
  std::string check_file;
  check->add_option("--file", check_file, "Algebra file")->required();
  AddCommon(check, common);
  check->callback([&] { run = [&] { return RunCheck(check_file, common); }; });

  auto* complete = app.add_subcommand("complete", "Complete a partial product");
  std::string complete_file, complete_out;
  std::size_t limit = 2;
  complete->add_option("--file", complete_file, "Partial spec file")->required();
  complete->add_option("--limit", limit, "Maximum completions to find")
      ->check(CLI::PositiveNumber);
  complete->add_option("--out", complete_out, "Write the unique completion to FILE");
  AddCommon(complete, common);
  complete->callback([&] {
    run = [&] { return RunComplete(complete_file, limit, complete_out, common); };
  });

  auto* embed = app.add_subcommand("embed", "List embeddings between two algebras");
  std::string embed_from, embed_to;
  std::uint64_t embed_budget = 0;
  embed->add_option("--from", embed_from, "Source algebra")->required();
  embed->add_option("--to", embed_to, "Target algebra")->required();
  embed->add_option("--budget", embed_budget, "Node budget")->check(CLI::PositiveNumber);
  AddCommon(embed, common);
  embed->callback([&] {
    run = [&] {
      return RunEmbed(embed_from, embed_to, embed_budget ? embed_budget : DefaultBudget(10'000'000),
                      common);
    };
  });

  auto* amalgamate = app.add_subcommand("amalgamate", "Search for an amalgam of a span");
  AmalgamateArgs am;
  amalgamate->add_option("--span", am.span, "Span file")->required();
  amalgamate->add_option("--max-size", am.max_size, "Largest amalgam size")
      ->check(CLI::Range(1, 64));
  amalgamate->add_option("--budget", am.budget, "Decision node budget")
      ->check(CLI::PositiveNumber);
  amalgamate->add_option("--flags", am.flags, "Variety flags, comma separated");
  amalgamate->add_option("--mode", am.mode, "seeded or square")
      ->check(CLI::IsMember({"seeded", "square"}));
  amalgamate->add_option("--threads", am.threads, "Worker threads")->check(CLI::Range(1, 256));
  amalgamate->add_flag("--stats", am.stats, "Print search statistics");
  amalgamate->add_option("--out", am.out, "Write a found amalgam to FILE");
  AddCommon(amalgamate, common);
  amalgamate->callback([&] {
    run = [&] {
      if (am.budget == 0) am.budget = DefaultBudget(2'000'000'000);
      return RunAmalgamate(am, common);
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate residuated lattices");
  int enum_size = 0;
  std::string enum_flags, enum_out;
  std::uint64_t enum_budget = 0;
  enumerate->add_option("--size", enum_size, "Carrier size")->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--flags", enum_flags, "Variety flags, comma separated");
  enumerate->add_option("--out", enum_out, "Directory for one file per algebra");
  enumerate->add_option("--budget", enum_budget, "Node budget")->check(CLI::PositiveNumber);
  AddCommon(enumerate, common);
  enumerate->callback([&] {
    run = [&] {
      return RunEnumerate(enum_size, enum_flags, enum_out,
                          enum_budget ? enum_budget : DefaultBudget(1'000'000'000), common);
    };
  });

  auto* hunt = app.add_subcommand("span-hunt", "Generate spans and search each for an amalgam");
  HuntArgs ha;
  rla_hunt_options_init(&ha.options);
  std::uint64_t hunt_budget = 0;
  hunt->add_option("--apex-max", ha.options.apex_max, "Largest apex")->check(CLI::Range(1, 8));
  hunt->add_option("--leg-max", ha.options.leg_max, "Largest leg")->check(CLI::Range(1, 8));
  hunt->add_option("--search-bound", ha.options.search_bound, "Amalgam size bound")
      ->check(CLI::Range(1, 16));
  hunt->add_option("--budget", hunt_budget, "Node budget per span")->check(CLI::PositiveNumber);
  hunt->add_option("--threads", ha.options.threads, "Worker threads")->check(CLI::Range(1, 256));
  hunt->add_option("--flags", ha.flags, "Variety flags, comma separated");
  hunt->add_option("--log", ha.log, "Append one record per span to FILE");
  hunt->add_option("--resume", ha.resume, "Continue after the last record in FILE");
  hunt->add_flag("--json", common.json, "Print the machine-readable report only");
  hunt->callback([&] {
    run = [&] {
      ha.options.budget = hunt_budget ? hunt_budget : DefaultBudget(ha.options.budget);
      return RunHunt(ha, common);
    };
  });

  auto* certify = app.add_subcommand("certify", "Check a derivation certificate");
  std::string cert_span, cert_file, cert_flags;
  certify->add_option("--span", cert_span, "Span file (default: the certificate's)");
  certify->add_option("--cert", cert_file, "Certificate file")->required();
  auto* flags_opt = certify->add_option("--flags", cert_flags,
                                        "Variety flags in force (default: the certificate's)");
  AddCommon(certify, common);
  certify->callback([&] {
    run = [&] {
      return RunCertify(cert_span, cert_file, cert_flags, flags_opt->count() > 0, common);
    };
  });

  auto* fixtures = app.add_subcommand("fixtures", "Verify the bundled fixtures");
  bool verify = false, no_search = false;
  std::string fixture_dir = RLAMALG_FIXTURE_DIR;
  int fixture_threads = 1;
  fixtures->add_flag("--verify", verify, "Run the fixture gate")->required();
  fixtures->add_option("--dir", fixture_dir, "Fixture directory");
  fixtures->add_flag("--no-search", no_search, "Skip the bounded searches");
  fixtures->add_option("--threads", fixture_threads, "Search threads")->check(CLI::Range(1, 256));
  AddCommon(fixtures, common);
  fixtures->callback([&] {
    run = [&] { return RunFixtures(fixture_dir, !no_search, fixture_threads, common); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  try {
    return run();
  } catch (const CliError& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
