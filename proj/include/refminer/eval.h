// Copyright 2026 The refminer Authors.
//
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

#ifndef REFMINER_EVAL_H_
#define REFMINER_EVAL_H_

// Precision/recall over a corpus of seeded fixtures. Each fixture is a
// directory holding manifest.json:
//   {"id", "before", "after", "expected": [{"type", "detail": {...}}],
//    "notes"}

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "refminer/detectors.h"

namespace refminer {

// Missing or invalid manifest, or a fixture that cannot be analyzed.
class EvalError : public std::runtime_error {
 public:
  EvalError(std::string fixture, const std::string &what)
      : std::runtime_error(fixture + ": " + what), fixture_(std::move(fixture)) {}
  const std::string &fixture() const { return fixture_; }

 private:
  std::string fixture_;
};

struct Finding {
  RefactoringType type = RefactoringType::kRenameClass;
  Detail detail;

  auto operator<=>(const Finding &) const = default;
};

struct FixtureManifest {
  std::string id;
  std::filesystem::path before;  // resolved against the fixture directory
  std::filesystem::path after;
  std::vector<Finding> expected;
  std::string notes;
};

FixtureManifest LoadManifest(const std::filesystem::path &manifest_path);

struct FixtureResult {
  std::string id;
  std::vector<Finding> expected;
  std::vector<Finding> detected;
  std::vector<Finding> true_positives;
  std::vector<Finding> false_positives;
  std::vector<Finding> false_negatives;
};

struct TypeTally {
  RefactoringType type;
  int expected = 0;
  int detected = 0;
  int true_positives = 0;
};

struct EvalResult {
  std::vector<FixtureResult> fixtures;
  std::vector<std::string> warnings;
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;

  // Undefined (nullopt) when the denominator is zero.
  std::optional<double> Precision() const;
  std::optional<double> Recall() const;
  std::optional<double> F1() const;
  // One row per type seen in any fixture, catalog order.
  std::vector<TypeTally> PerType() const;
};

// Multiset comparison of expected against detected (type, detail) pairs.
FixtureResult ScoreFixture(const std::string &id, std::vector<Finding> expected,
                           std::vector<Finding> detected);

FixtureResult RunFixture(const FixtureManifest &manifest);

// Evaluates every subdirectory of `corpus_dir` that holds a manifest.json,
// in path order.
EvalResult RunEval(const std::filesystem::path &corpus_dir);

std::string RenderEvalText(const EvalResult &result);
std::string RenderEvalJson(const EvalResult &result);

}  // namespace refminer

#endif  // REFMINER_EVAL_H_
