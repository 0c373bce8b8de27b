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

#ifndef REFMINER_BEHAVIOR_H_
#define REFMINER_BEHAVIOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "refminer/code_model.h"
#include "refminer/detectors.h"
#include "refminer/matcher.h"

namespace refminer {

enum class BehaviorChangeKind {
  kMethodAdded,
  kMethodRemoved,
  kStatementModified,
  kStatementAdded,
  kStatementRemoved,
};

// "method-added", "statement-modified", ...
std::string_view ToString(BehaviorChangeKind kind);
std::optional<BehaviorChangeKind> BehaviorChangeKindFromString(
    std::string_view s);

struct BehaviorChange {
  BehaviorChangeKind kind = BehaviorChangeKind::kStatementModified;
  // After file for added/modified, before file for removed.
  SourceLocation location;
  int first_line = 0;
  int last_line = 0;

  bool operator==(const BehaviorChange &) const = default;
};

// Structural edits not explained by `detection`. Changes on after-file lines
// claimed by a refactoring are dropped; removed statements of operations
// that lost code to an extracted method are dropped as well.
std::vector<BehaviorChange> ReportBehaviorChanges(const ModelDiff &diff,
                                                  const Detection &detection);

}  // namespace refminer

#endif  // REFMINER_BEHAVIOR_H_
