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

#include "rlamalg/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "product_solver.hpp"
#include "rlamalg/error.hpp"

namespace rlamalg {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParse, "field '" + field + "': " + what);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

void RequireKeys(const Json& j, const std::string& what,
                 const std::set<std::string>& allowed,
                 const std::set<std::string>& required) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, what + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "lres" || key == "rres") {
      Fail(key, "residual tables are derived from order and product and may not be given");
    }
    if (!allowed.count(key)) Fail(key, "unknown field in " + what);
  }
  for (const auto& key : required) {
    if (!j.contains(key)) Fail(key, "missing in " + what);
  }
}

int GetInt(const Json& j, const std::string& field) {
  const Json& v = j.at(field);
  if (!v.is_number_integer()) Fail(field, "expected an integer");
  return v.get<int>();
}

std::string GetString(const Json& j, const std::string& field) {
  const Json& v = j.at(field);
  if (!v.is_string()) Fail(field, "expected a string");
  return v.get<std::string>();
}

std::vector<int> GetIntArray(const Json& v, const std::string& field) {
  if (!v.is_array()) Fail(field, "expected an array");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) Fail(field, "expected integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<int> GetMatrix(const Json& j, const std::string& field, int n) {
  const Json& v = j.at(field);
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    Fail(field, "expected " + std::to_string(n) + " rows");
  }
  std::vector<int> out;
  for (std::size_t r = 0; r < v.size(); ++r) {
    auto row = GetIntArray(v[r], field);
    if (static_cast<int>(row.size()) != n) {
      Fail(field, "row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                      " entries, expected " + std::to_string(n));
    }
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

void CheckIndex(int i, int n, const std::string& field) {
  if (i < 0 || i >= n) Fail(field, "index " + std::to_string(i) + " out of range");
}

PartialAlgebraSpec SpecFromJson(const Json& j) {
  RequireKeys(j, "algebra",
              {"name", "size", "labels", "leq", "covers", "product", "unit", "zero",
               "central", "idempotent_elements"},
              {"size", "product", "unit"});
  PartialAlgebraSpec spec;
  if (j.contains("name")) spec.name = GetString(j, "name");
  const int n = GetInt(j, "size");
  if (n <= 0) Fail("size", "must be positive");
  if (n > internal::kMaxCarrier) Fail("size", "exceeds " + std::to_string(internal::kMaxCarrier));
  spec.size = n;
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_array() || static_cast<int>(labels.size()) != n) {
      Fail("labels", "expected " + std::to_string(n) + " strings");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!l.is_string()) Fail("labels", "expected strings");
      if (!seen.insert(l.get<std::string>()).second) {
        Fail("labels", "duplicate label '" + l.get<std::string>() + "'");
      }
      spec.labels.push_back(l.get<std::string>());
    }
  }
  if (j.contains("leq") == j.contains("covers")) {
    Fail("leq", "exactly one of 'leq' and 'covers' must be given");
  }
  if (j.contains("leq")) {
    for (int v : GetMatrix(j, "leq", n)) {
      if (v != 0 && v != 1) Fail("leq", "entries must be 0 or 1");
      spec.leq.push_back(static_cast<std::uint8_t>(v));
    }
  } else {
    const Json& covers = j.at("covers");
    if (!covers.is_array()) Fail("covers", "expected an array of [lower, upper] pairs");
    std::vector<std::uint8_t> rel(n * n, 0);
    for (const auto& pair : covers) {
      auto p = GetIntArray(pair, "covers");
      if (p.size() != 2) Fail("covers", "expected [lower, upper] pairs");
      CheckIndex(p[0], n, "covers");
      CheckIndex(p[1], n, "covers");
      rel[p[0] * n + p[1]] = 1;
    }
    spec.leq = ReflexiveTransitiveClosure(n, rel);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (spec.leq[a * n + b] && spec.leq[b * n + a]) {
          Fail("covers", "cover relation has a cycle");
        }
      }
    }
  }
  const auto product = GetMatrix(j, "product", n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int v = product[a * n + b];
      if (v == kUndefined) continue;
      CheckIndex(v, n, "product");
      spec.product_constraints.push_back({a, b, v});
    }
  }
  spec.unit = GetInt(j, "unit");
  CheckIndex(spec.unit, n, "unit");
  if (j.contains("zero")) {
    spec.zero = GetInt(j, "zero");
    CheckIndex(*spec.zero, n, "zero");
  }
  for (const char* field : {"central", "idempotent_elements"}) {
    if (!j.contains(field)) continue;
    auto list = GetIntArray(j.at(field), field);
    for (int i : list) CheckIndex(i, n, field);
    (std::string(field) == "central" ? spec.central : spec.idempotent_elements) =
        std::vector<Index>(list.begin(), list.end());
  }
  return spec;
}

std::string Row(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out + "]";
}

void WriteSpec(std::ostringstream& out, const PartialAlgebraSpec& spec,
               const std::string& indent) {
  const int n = spec.size;
  const std::string in = indent + "  ";
  out << "{\n";
  out << in << "\"name\": " << Json(spec.name).dump() << ",\n";
  out << in << "\"size\": " << n << ",\n";
  if (!spec.labels.empty()) {
    out << in << "\"labels\": [";
    for (int i = 0; i < n; ++i) out << (i ? ", " : "") << Json(spec.labels[i]).dump();
    out << "],\n";
  }
  auto matrix = [&](const char* key, const std::vector<int>& cells) {
    out << in << "\"" << key << "\": [\n";
    for (int r = 0; r < n; ++r) {
      std::vector<int> row(cells.begin() + r * n, cells.begin() + (r + 1) * n);
      out << in << "  " << Row(row) << (r + 1 < n ? ",\n" : "\n");
    }
    out << in << "],\n";
  };
  matrix("leq", std::vector<int>(spec.leq.begin(), spec.leq.end()));
  std::vector<int> product(n * n, kUndefined);
  for (const auto& c : spec.product_constraints) product[c.left * n + c.right] = c.value;
  matrix("product", product);
  out << in << "\"unit\": " << spec.unit;
  if (spec.zero) out << ",\n" << in << "\"zero\": " << *spec.zero;
  if (spec.central) {
    out << ",\n" << in << "\"central\": "
        << Row(std::vector<int>(spec.central->begin(), spec.central->end()));
  }
  if (spec.idempotent_elements) {
    out << ",\n" << in << "\"idempotent_elements\": "
        << Row(std::vector<int>(spec.idempotent_elements->begin(),
                                spec.idempotent_elements->end()));
  }
  out << "\n" << indent << "}";
}

std::vector<Index> GetMap(const Json& j, const std::string& field) {
  if (!j.contains(field)) Fail(field, "missing");
  auto v = GetIntArray(j.at(field), field);
  return {v.begin(), v.end()};
}

}  // namespace

PartialAlgebraSpec ParseSpec(std::string_view text) { return SpecFromJson(ParseJson(text)); }

std::string SerializeSpec(const PartialAlgebraSpec& spec) {
  std::ostringstream out;
  WriteSpec(out, spec, "");
  out << "\n";
  return out.str();
}

std::string SerializeAlgebra(const Algebra& alg) {
  PartialAlgebraSpec spec = SpecFromAlgebra(alg);
  return SerializeSpec(spec);
}

Algebra CompleteUnique(const PartialAlgebraSpec& spec) {
  auto completions = CompletePartialProduct(spec, 2);
  if (completions.empty()) {
    throw Error(ErrorCode::kInconsistentSpec,
                "algebra '" + spec.name + "' has no residuated completion");
  }
  if (completions.size() > 1) {
    throw Error(ErrorCode::kInconsistentSpec,
                "algebra '" + spec.name + "' does not determine its product uniquely");
  }
  return completions.front();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PartialAlgebraSpec LoadSpecFile(const std::string& path) {
  try {
    return ParseSpec(ReadFile(path));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, path + ": " + e.what());
  }
}

Algebra LoadAlgebraFile(const std::string& path) { return CompleteUnique(LoadSpecFile(path)); }

std::vector<std::string> SpanInputs(const std::string& path) {
  const Json j = ParseJson(ReadFile(path));
  RequireKeys(j, "span", {"name", "apex", "B", "C", "phi_B", "phi_C"},
              {"apex", "B", "C", "phi_B", "phi_C"});
  const std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::vector<std::string> out{path};
  for (const char* key : {"apex", "B", "C"}) out.push_back((dir / GetString(j, key)).string());
  return out;
}

Span LoadSpanFile(const std::string& path) {
  const auto inputs = SpanInputs(path);
  const Json j = ParseJson(ReadFile(path));
  const std::string name = j.contains("name") ? GetString(j, "name") : std::string();
  Algebra apex = LoadAlgebraFile(inputs[1]);
  Algebra left = LoadAlgebraFile(inputs[2]);
  Algebra right = LoadAlgebraFile(inputs[3]);
  auto phi_left = GetMap(j, "phi_B");
  auto phi_right = GetMap(j, "phi_C");
  if (static_cast<int>(phi_left.size()) != apex.size()) Fail("phi_B", "length must equal apex size");
  if (static_cast<int>(phi_right.size()) != apex.size()) Fail("phi_C", "length must equal apex size");
  for (Index v : phi_left) CheckIndex(v, left.size(), "phi_B");
  for (Index v : phi_right) CheckIndex(v, right.size(), "phi_C");
  return MakeSpan(std::move(apex), std::move(left), std::move(right), std::move(phi_left),
                  std::move(phi_right), name);
}

std::string SerializeAmalgam(const Amalgam& amalgam) {
  std::ostringstream out;
  out << "{\n  \"target\": ";
  WriteSpec(out, SpecFromAlgebra(amalgam.target), "  ");
  out << ",\n  \"psi_B\": " << Row({amalgam.psi_left.begin(), amalgam.psi_left.end()});
  out << ",\n  \"psi_C\": " << Row({amalgam.psi_right.begin(), amalgam.psi_right.end()});
  out << "\n}\n";
  return out.str();
}

Amalgam ParseAmalgam(std::string_view text) {
  const Json j = ParseJson(text);
  RequireKeys(j, "amalgam", {"target", "psi_B", "psi_C"}, {"target", "psi_B", "psi_C"});
  Algebra target = CompleteUnique(SpecFromJson(j.at("target")));
  auto psi_left = GetMap(j, "psi_B");
  auto psi_right = GetMap(j, "psi_C");
  for (Index v : psi_left) CheckIndex(v, target.size(), "psi_B");
  for (Index v : psi_right) CheckIndex(v, target.size(), "psi_C");
  return {target, psi_left, psi_right};
}

std::string SerializeOutcome(const SearchOutcome& outcome) {
  Json j;
  j["outcome"] = OutcomeName(outcome.kind);
  j["bound"] = outcome.bound;
  j["size"] = outcome.size;
  Json stats;
  stats["nodes"] = outcome.stats.nodes;
  stats["propagation_failures"] = outcome.stats.propagation_failures;
  stats["lattices"] = outcome.stats.lattices;
  stats["first_size"] = outcome.stats.first_size;
  stats["last_size"] = outcome.stats.last_size;
  j["stats"] = stats;
  if (outcome.amalgam) j["amalgam"] = Json::parse(SerializeAmalgam(*outcome.amalgam));
  return j.dump(2) + "\n";
}

std::string SerializeRunReport(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["inputs_digest"] = report.inputs_digest;
  j["outcome"] = report.outcome.empty() ? Json() : ParseJson(report.outcome);
  j["stats"] = report.stats.empty() ? Json() : ParseJson(report.stats);
  j["tool_version"] = report.tool_version;
  return j.dump(2) + "\n";
}

RunReport ParseRunReport(std::string_view text) {
  const Json j = ParseJson(text);
  RequireKeys(j, "run report", {"command", "inputs_digest", "outcome", "stats", "tool_version"},
              {"command", "inputs_digest", "outcome", "stats", "tool_version"});
  RunReport r;
  r.command = GetString(j, "command");
  r.inputs_digest = GetString(j, "inputs_digest");
  r.outcome = j.at("outcome").is_null() ? std::string() : j.at("outcome").dump();
  r.stats = j.at("stats").is_null() ? std::string() : j.at("stats").dump();
  r.tool_version = GetString(j, "tool_version");
  return r;
}

std::string DigestInputs(const std::vector<std::string>& texts) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx) throw Error(ErrorCode::kIo, "cannot allocate digest context");
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const auto& t : texts) {
    const std::string header = std::to_string(t.size()) + ":";
    EVP_DigestUpdate(ctx, header.data(), header.size());
    EVP_DigestUpdate(ctx, t.data(), t.size());
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx, digest, &length);
  EVP_MD_CTX_free(ctx);
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string RenderHasse(const Algebra& alg) {
  const int n = alg.size();
  if (n > kMaxHasseSize) {
    throw Error(ErrorCode::kTooLarge, "Hasse rendering is limited to " +
                                          std::to_string(kMaxHasseSize) + " elements");
  }
  std::vector<std::pair<Index, Index>> covers;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (a == b || !alg.leq(a, b)) continue;
      bool cover = true;
      for (Index c = 0; c < n && cover; ++c) {
        if (c != a && c != b && alg.leq(a, c) && alg.leq(c, b)) cover = false;
      }
      if (cover) covers.emplace_back(a, b);
    }
  }
  // Height: length of the longest chain from the bottom.
  std::vector<int> height(n, 0);
  for (int round = 0; round < n; ++round) {
    for (const auto& [a, b] : covers) height[b] = std::max(height[b], height[a] + 1);
  }
  const int levels = *std::max_element(height.begin(), height.end()) + 1;
  auto marker = [&](Index i) {
    const bool central = IsCentralElement(alg, i);
    const bool idem = IsIdempotentElement(alg, i);
    if (central) return idem ? std::string("(*)") : std::string("( )");
    return idem ? std::string("[*]") : std::string("[ ]");
  };
  std::ostringstream out;
  if (!alg.name().empty()) out << alg.name() << "\n";
  for (int level = levels - 1; level >= 0; --level) {
    out << "  ";
    bool first = true;
    for (Index i = 0; i < n; ++i) {
      if (height[i] != level) continue;
      out << (first ? "" : "   ") << marker(i) << " " << alg.label(i);
      first = false;
    }
    out << "\n";
  }
  out << "covers:";
  for (const auto& [a, b] : covers) out << " " << alg.label(a) << "<" << alg.label(b);
  out << "\n";
  return out.str();
}

}  // namespace rlamalg
