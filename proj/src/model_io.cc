// src/model_io.cc

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

#include "ugcbench/model_io.h"

#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "ugcbench/error.h"
#include "ugcbench/hash.h"

namespace ugcbench {
namespace {

constexpr size_t kHeaderBytes = 4 + 4;
constexpr size_t kConfigBytes = 4 + 4 + 8 * 4;

template <typename T>
void PutLe(T value, std::string *out) {
  for (size_t b = 0; b < sizeof(T); ++b)
    out->push_back(static_cast<char>((static_cast<uint64_t>(value) >> (8 * b)) & 0xFF));
}

template <typename T>
T GetLe(const std::string &bytes, size_t *pos) {
  if (*pos + sizeof(T) > bytes.size()) throw ValidationError("model file is truncated");
  uint64_t v = 0;
  for (size_t b = 0; b < sizeof(T); ++b)
    v |= static_cast<uint64_t>(static_cast<unsigned char>(bytes[*pos + b])) << (8 * b);
  *pos += sizeof(T);
  return static_cast<T>(v);
}

std::string EncodeConfig(const StudentConfig &c) {
  std::string out;
  PutLe<uint32_t>(static_cast<uint32_t>(c.mode), &out);
  PutLe<uint32_t>(0, &out);
  PutLe<uint64_t>(c.buckets, &out);
  PutLe<uint64_t>(c.hidden, &out);
  PutLe<uint64_t>(c.out_dim, &out);
  PutLe<uint64_t>(c.seed, &out);
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path);
  return ss.str();
}

void WriteFile(const std::string &path, const std::string &bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path);
}

std::string Join(const std::string &dir, const std::string &name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string FormatLoss(double loss) {
  std::ostringstream ss;
  ss << std::setprecision(17) << loss;
  return ss.str();
}

}  // namespace

std::string SerializeModel(const StudentModel &model) {
  std::string out(kModelMagic, 4);
  PutLe<uint32_t>(kModelFormatVersion, &out);
  out += EncodeConfig(model.config());
  out.reserve(out.size() + 8 * (model.table().size() + model.projection().size()));
  for (double w : model.table()) PutLe<uint64_t>(std::bit_cast<uint64_t>(w), &out);
  for (double w : model.projection()) PutLe<uint64_t>(std::bit_cast<uint64_t>(w), &out);
  return out;
}

StudentModel DeserializeModel(const std::string &bytes) {
  if (bytes.size() < kHeaderBytes + kConfigBytes || std::memcmp(bytes.data(), kModelMagic, 4) != 0)
    throw ValidationError("not a model file (bad magic)");
  size_t pos = 4;
  const auto version = GetLe<uint32_t>(bytes, &pos);
  if (version != kModelFormatVersion)
    throw ValidationError("unsupported model format version " + std::to_string(version));
  StudentConfig c;
  const auto mode = GetLe<uint32_t>(bytes, &pos);
  if (mode > static_cast<uint32_t>(FeatureMode::kCharNgram))
    throw ValidationError("unknown feature mode " + std::to_string(mode));
  c.mode = static_cast<FeatureMode>(mode);
  GetLe<uint32_t>(bytes, &pos);
  c.buckets = GetLe<uint64_t>(bytes, &pos);
  c.hidden = GetLe<uint64_t>(bytes, &pos);
  c.out_dim = GetLe<uint64_t>(bytes, &pos);
  c.seed = GetLe<uint64_t>(bytes, &pos);
  c.Validate();
  const uint64_t table_n = c.buckets * c.hidden;
  const uint64_t proj_n = c.out_dim * c.hidden;
  if (bytes.size() - pos != 8 * (table_n + proj_n))
    throw ValidationError("model payload is " + std::to_string(bytes.size() - pos) +
                          " bytes, expected " + std::to_string(8 * (table_n + proj_n)));
  std::vector<double> table(table_n), proj(proj_n);
  for (double &w : table) w = std::bit_cast<double>(GetLe<uint64_t>(bytes, &pos));
  for (double &w : proj) w = std::bit_cast<double>(GetLe<uint64_t>(bytes, &pos));
  return StudentModel(c, std::move(table), std::move(proj));
}

void SaveModel(const StudentModel &model, const std::string &path) {
  WriteFile(path, SerializeModel(model));
}

StudentModel LoadModel(const std::string &path) { return DeserializeModel(ReadFile(path)); }

std::string ConfigDigest(const StudentConfig &config) {
  return HexDigest(Fnv1a64(EncodeConfig(config)));
}

std::string ModelDigest(const StudentModel &model) {
  return HexDigest(Fnv1a64(SerializeModel(model)));
}

std::string CheckpointFileName(uint64_t step) { return "ckpt_" + std::to_string(step) + ".bin"; }

void WriteCheckpoint(const std::string &dir, const Checkpoint &checkpoint) {
  std::filesystem::create_directories(dir);
  const std::string bin = Join(dir, CheckpointFileName(checkpoint.step));
  SaveModel(checkpoint.model, bin);
  nlohmann::ordered_json meta;
  meta["step"] = checkpoint.step;
  meta["validation_loss"] = checkpoint.validation_loss;
  meta["config_digest"] = ConfigDigest(checkpoint.model.config());
  WriteFile(Join(dir, "ckpt_" + std::to_string(checkpoint.step) + ".meta.json"),
            meta.dump(2) + "\n");
}

void WriteLearningCurve(const std::string &dir, double initial_loss,
                        const std::vector<Checkpoint> &checkpoints) {
  std::filesystem::create_directories(dir);
  std::string csv = "step,validation_loss\n0," + FormatLoss(initial_loss) + "\n";
  for (const auto &c : checkpoints)
    csv += std::to_string(c.step) + "," + FormatLoss(c.validation_loss) + "\n";
  WriteFile(Join(dir, "learning_curve.csv"), csv);
}

void WriteBestMarker(const std::string &dir, const Checkpoint &best) {
  WriteFile(Join(dir, "best_checkpoint"), CheckpointFileName(best.step) + "\n");
}

StudentModel LoadBestCheckpoint(const std::string &dir) {
  std::string name = ReadFile(Join(dir, "best_checkpoint"));
  while (!name.empty() && (name.back() == '\n' || name.back() == '\r')) name.pop_back();
  if (name.empty() || name.find('/') != std::string::npos)
    throw ValidationError("malformed best_checkpoint marker in " + dir);
  return LoadModel(Join(dir, name));
}

}  // namespace ugcbench
