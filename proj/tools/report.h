// tools/report.h

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

#ifndef UGCBENCH_TOOLS_REPORT_H_
#define UGCBENCH_TOOLS_REPORT_H_

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace ugcbench::cli {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  uint64_t seed = 0;
  int threads = 0;
  std::string json_out;
  std::string manifest_out;
  bool quiet = false;
};

// Everything a command reports. `config` feeds the digest, so it must hold
// only what determines the outputs.
struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<uint64_t> seeds;
};

std::string ToolVersion();
std::string ConfigDigest(const Json &config);

// Builds the run manifest, writes the JSON report and the manifest where
// requested, and returns the full report document.
Json FinishReport(Report &report, const GlobalOptions &global,
                  std::chrono::steady_clock::time_point start, std::ostream &err);

}  // namespace ugcbench::cli

#endif  // UGCBENCH_TOOLS_REPORT_H_
