// tools/svg.h

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

#ifndef UGCBENCH_TOOLS_SVG_H_
#define UGCBENCH_TOOLS_SVG_H_

#include <array>
#include <string>
#include <vector>

namespace ugcbench::cli {

// Static scatter plot, one colour per distinct label (sorted order), with a
// legend. Output depends only on the inputs.
std::string ScatterSvg(const std::vector<std::array<double, 2>> &points,
                       const std::vector<std::string> &labels, const std::string &x_title,
                       const std::string &y_title);

}  // namespace ugcbench::cli

#endif  // UGCBENCH_TOOLS_SVG_H_
