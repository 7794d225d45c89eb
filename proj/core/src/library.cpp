// Copyright 2026 The subarch Authors
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

#include "subarch/library.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "subarch/candidates.hpp"
#include "subarch/covering.hpp"
#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"

#ifndef SUBARCH_VERSION
#define SUBARCH_VERSION "0.0.0"
#endif

namespace subarch {
namespace {

using Json = nlohmann::ordered_json;

Json ref_to_json(const SubarchRef& r) {
  Json j;
  j["vertices"] = r.vertex_list();
  j["class_key"] = to_hex(r.class_key);
  return j;
}

Json refs_to_json(const std::vector<SubarchRef>& refs) {
  Json out = Json::array();
  for (const auto& r : refs) out.push_back(ref_to_json(r));
  return out;
}

SubarchRef ref_from_json(const Json& j, const Architecture& arch) {
  if (!j.is_object() || !j.contains("vertices") ||
      !j["vertices"].is_array() || !j.contains("class_key") ||
      !j["class_key"].is_string()) {
    throw ValidationError("library entry lacks vertices or class_key");
  }
  VertexMask mask = 0;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer() || v.get<long long>() < 0 ||
        v.get<long long>() >= arch.size()) {
      throw ValidationError("library vertex out of range");
    }
    mask |= bit(v.get<Vertex>());
  }
  SubarchRef ref;
  try {
    ref = make_subarch(arch, mask);
  } catch (const UsageError& e) {
    throw ValidationError(std::string("library entry: ") + e.what());
  }
  if (to_hex(ref.class_key) != j["class_key"].get<std::string>()) {
    throw ValidationError("library class key does not match its vertices");
  }
  return ref;
}

std::vector<SubarchRef> refs_from_json(const Json& j,
                                       const Architecture& arch) {
  if (!j.is_array()) throw ValidationError("expected a list of subsets");
  std::vector<SubarchRef> out;
  for (const auto& r : j) out.push_back(ref_from_json(r, arch));
  return out;
}

}  // namespace

std::string tool_version() { return SUBARCH_VERSION; }

std::string build_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

CandidateLibrary build_library(const Architecture& arch,
                               std::span<const int> sizes,
                               std::span<const int> covering_bounds,
                               const RunOptions& run) {
  CandidateLibrary lib;
  lib.architecture = arch.name();
  lib.architecture_hash = arch.content_hash();
  lib.tool_version = tool_version();
  lib.created = build_timestamp();
  for (int n : sizes) {
    const CandidateSet cand = candidates(arch, n, run);
    LibraryEntry e;
    e.size = n;
    e.candidates = cand.members;
    e.optimal = optimal_candidates(arch, cand, run);
    for (int k : covering_bounds) {
      e.coverings.push_back({k, cover(arch, cand, k, run).members});
    }
    lib.entries.push_back(std::move(e));
  }
  return lib;
}

std::string library_to_json(const CandidateLibrary& lib) {
  Json doc;
  doc["format_version"] = kLibraryFormatVersion;
  doc["tool_version"] = lib.tool_version;
  doc["architecture"] = {{"name", lib.architecture},
                         {"hash", lib.architecture_hash}};
  doc["created"] = lib.created;
  Json entries = Json::array();
  for (const auto& e : lib.entries) {
    Json je;
    je["size"] = e.size;
    je["candidates"] = refs_to_json(e.candidates);
    je["optimal"] = refs_to_json(e.optimal);
    Json covers = Json::array();
    for (const auto& c : e.coverings) {
      covers.push_back({{"max_elements", c.max_elements},
                        {"members", refs_to_json(c.members)}});
    }
    je["coverings"] = std::move(covers);
    entries.push_back(std::move(je));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

CandidateLibrary library_from_json(std::string_view text,
                                   const Architecture& arch) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("library parse error: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("format_version")) {
      throw ValidationError("library lacks a format_version");
    }
    const int version = doc.at("format_version").get<int>();
    if (version != kLibraryFormatVersion) {
      throw ValidationError("unsupported library format version " +
                            std::to_string(version) + " (expected " +
                            std::to_string(kLibraryFormatVersion) + ")");
    }
    CandidateLibrary lib;
    lib.architecture = doc.at("architecture").at("name").get<std::string>();
    lib.architecture_hash =
        doc.at("architecture").at("hash").get<std::string>();
    if (lib.architecture_hash != arch.content_hash()) {
      throw ValidationError("library was computed for architecture hash " +
                            lib.architecture_hash + " but '" + arch.name() +
                            "' hashes to " + arch.content_hash());
    }
    lib.tool_version = doc.at("tool_version").get<std::string>();
    lib.created = doc.at("created").get<std::string>();
    for (const auto& je : doc.at("entries")) {
      LibraryEntry e;
      e.size = je.at("size").get<int>();
      e.candidates = refs_from_json(je.at("candidates"), arch);
      e.optimal = refs_from_json(je.at("optimal"), arch);
      for (const auto& jc : je.at("coverings")) {
        e.coverings.push_back({jc.at("max_elements").get<int>(),
                               refs_from_json(jc.at("members"), arch)});
      }
      lib.entries.push_back(std::move(e));
    }
    return lib;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed library: ") + e.what());
  }
}

void save_library(const CandidateLibrary& lib,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ValidationError("cannot write library '" + path.string() + "'");
  }
  out << library_to_json(lib);
}

CandidateLibrary load_library(const std::filesystem::path& path,
                              const Architecture& arch) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open library '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return library_from_json(buf.str(), arch);
}

}  // namespace subarch
