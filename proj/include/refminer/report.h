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

#ifndef REFMINER_REPORT_H_
#define REFMINER_REPORT_H_

// One file-pair comparison: parse, match, detect, report.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "refminer/behavior.h"
#include "refminer/detectors.h"

namespace refminer {

inline constexpr std::string_view kToolVersion = REFMINER_VERSION;

struct ComparisonReport {
  std::string before;
  std::string after;
  std::vector<Refactoring> refactorings;
  std::vector<BehaviorChange> behavior_changes;
  std::string tool_version{kToolVersion};
};

// Parses both sources and compares them. Throws FrontendError subclasses
// for malformed or unsupported input.
ComparisonReport CompareSources(std::string_view before_source,
                                std::string_view after_source,
                                const std::string &before_id,
                                const std::string &after_id,
                                bool report_behavior = true);

// Same, reading the files first. Throws InputError for unreadable files.
ComparisonReport CompareFiles(const std::filesystem::path &before,
                              const std::filesystem::path &after,
                              bool report_behavior = true);

// {"before", "after", "refactorings": [{"type", "description",
// "affectedLines"}], "behaviorChanges": [{"kind", "lines"}], "toolVersion"}
std::string RenderJson(const ComparisonReport &report);
std::string RenderText(const ComparisonReport &report);

// "7-10" or "12".
std::string FormatLineRange(int first, int last);

}  // namespace refminer

#endif  // REFMINER_REPORT_H_
