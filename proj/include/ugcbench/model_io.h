// include/ugcbench/model_io.h

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

#ifndef UGCBENCH_MODEL_IO_H_
#define UGCBENCH_MODEL_IO_H_

#include <string>
#include <vector>

#include "ugcbench/distill.h"

namespace ugcbench {

inline constexpr char kModelMagic[4] = {'U', 'G', 'C', 'D'};
inline constexpr uint32_t kModelFormatVersion = 1;

// Layout: magic "UGCD", u32 version, config block (u32 mode, u32 reserved,
// u64 buckets, u64 hidden, u64 out_dim, u64 seed), then the table and the
// projection as float64, row-major. Everything little-endian.
std::string SerializeModel(const StudentModel &model);
StudentModel DeserializeModel(const std::string &bytes);

void SaveModel(const StudentModel &model, const std::string &path);
StudentModel LoadModel(const std::string &path);

// FNV-1a over the encoded config block, as 16 hex digits.
std::string ConfigDigest(const StudentConfig &config);
// FNV-1a over the full serialized model.
std::string ModelDigest(const StudentModel &model);

// Checkpoint directory: ckpt_<step>.bin, ckpt_<step>.meta.json,
// learning_curve.csv (step,validation_loss) and a best_checkpoint marker
// holding the chosen file name.
std::string CheckpointFileName(uint64_t step);
void WriteCheckpoint(const std::string &dir, const Checkpoint &checkpoint);
void WriteLearningCurve(const std::string &dir, double initial_loss,
                        const std::vector<Checkpoint> &checkpoints);
void WriteBestMarker(const std::string &dir, const Checkpoint &best);
// Reads the marker and loads the model it names.
StudentModel LoadBestCheckpoint(const std::string &dir);

}  // namespace ugcbench

#endif  // UGCBENCH_MODEL_IO_H_
