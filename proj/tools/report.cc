// tools/report.cc

// Copyright 2026  The ugcbench Authors

// See ../LICENSE for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "report.h"

#include <fstream>

#include "ugcbench/error.h"
#include "ugcbench/hash.h"

namespace ugcbench::cli {
namespace {

void WriteJson(const std::string &path, const Json &doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace

std::string ToolVersion() { return UGCBENCH_VERSION; }

std::string ConfigDigest(const Json &config) { return HexDigest(Fnv1a64(config.dump())); }

Json FinishReport(Report &report, const GlobalOptions &global,
                  std::chrono::steady_clock::time_point start, std::ostream &err) {
  if (!global.json_out.empty()) report.outputs.push_back(global.json_out);
  if (!global.manifest_out.empty()) report.outputs.push_back(global.manifest_out);

  Json manifest;
  manifest["command"] = report.command;
  manifest["tool_version"] = ToolVersion();
  manifest["config_digest"] = ConfigDigest(report.config);
  manifest["config"] = report.config;
  manifest["seeds"] = report.seeds;
  manifest["inputs"] = report.inputs;
  manifest["outputs"] = report.outputs;
  manifest["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json doc;
  doc["command"] = report.command;
  doc["results"] = report.results;
  doc["manifest"] = manifest;

  if (!global.json_out.empty()) WriteJson(global.json_out, doc);
  if (!global.manifest_out.empty()) {
    WriteJson(global.manifest_out, manifest);
  } else if (!global.quiet) {
    err << "manifest: " << manifest.dump() << '\n';
  }
  return doc;
}

}  // namespace ugcbench::cli
