// include/ugcbench/error.h

// Copyright 2026  The ugcbench Authors

// See ../../LICENSE for clarification regarding multiple authors
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

#ifndef UGCBENCH_ERROR_H_
#define UGCBENCH_ERROR_H_

#include <stdexcept>
#include <string>

namespace ugcbench {

// Bad arguments, malformed inputs, violated preconditions. The CLI maps
// these to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string &what) : std::runtime_error(what) {}
};

// Zero-norm vectors, constant samples and similar inputs for which a metric
// is undefined.
class DegenerateInputError : public ValidationError {
 public:
  explicit DegenerateInputError(const std::string &what) : ValidationError(what) {}
};

// Missing files, short reads, unwritable outputs. Exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace ugcbench

#endif  // UGCBENCH_ERROR_H_
