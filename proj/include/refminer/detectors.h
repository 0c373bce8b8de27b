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

#ifndef REFMINER_DETECTORS_H_
#define REFMINER_DETECTORS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "refminer/code_model.h"
#include "refminer/matcher.h"

namespace refminer {

enum class RefactoringType {
  kRenameClass,
  kMoveClass,
  kRenameMethod,
  kMoveMethod,
  kPullUpMethod,
  kExtractMethod,
  kInlineMethod,
  kExtractAndMoveMethod,
  kRenameParameter,
  kRenameVariable,
  kRenameField,
  kMoveField,
  kPullUpField,
  kChangeParameterType,
  kChangeReturnType,
  kChangeVariableType,
  kChangeFieldType,
  kAddMethodModifier,
  kRemoveMethodModifier,
  kAddAttributeModifier,
  kRemoveAttributeModifier,
};

inline constexpr RefactoringType kAllRefactoringTypes[] = {
    RefactoringType::kRenameClass,         RefactoringType::kMoveClass,
    RefactoringType::kRenameMethod,        RefactoringType::kMoveMethod,
    RefactoringType::kPullUpMethod,        RefactoringType::kExtractMethod,
    RefactoringType::kInlineMethod,        RefactoringType::kExtractAndMoveMethod,
    RefactoringType::kRenameParameter,     RefactoringType::kRenameVariable,
    RefactoringType::kRenameField,         RefactoringType::kMoveField,
    RefactoringType::kPullUpField,         RefactoringType::kChangeParameterType,
    RefactoringType::kChangeReturnType,    RefactoringType::kChangeVariableType,
    RefactoringType::kChangeFieldType,     RefactoringType::kAddMethodModifier,
    RefactoringType::kRemoveMethodModifier, RefactoringType::kAddAttributeModifier,
    RefactoringType::kRemoveAttributeModifier,
};

// Identifier form, e.g. "RenameClass".
std::string_view ToString(RefactoringType type);
std::optional<RefactoringType> RefactoringTypeFromString(std::string_view s);
// Words form, e.g. "Rename Class".
std::string DisplayName(RefactoringType type);

// Type-specific key/value payload. Keys used:
//   class         after-side qualified class name
//   before/after  old and new name or spelled type
//   method, field, parameter, variable, modifier
//   fromClass/toClass, fromPackage/toPackage
//   source/extracted (Extract*), target/inlined (Inline)
using Detail = std::map<std::string, std::string>;

struct Refactoring {
  RefactoringType type = RefactoringType::kRenameClass;
  std::string description;
  SourceLocation before_location;
  SourceLocation after_location;
  std::vector<int> affected_lines;  // after file, sorted, unique
  Detail detail;
};

struct Detection {
  std::vector<Refactoring> refactorings;
  // Operations explained by a move, extract or inline finding.
  std::set<const OperationDecl *> consumed_added;
  std::set<const OperationDecl *> consumed_removed;
  // After-side operations that received or gave up statements.
  std::set<const OperationDecl *> extract_sources;
  std::set<const OperationDecl *> inline_targets;
};

// Runs every detector over `diff`. Output is sorted by after location,
// then type name, then detail.
Detection Detect(const ModelDiff &diff, const CodeModel &before,
                 const CodeModel &after);

}  // namespace refminer

#endif  // REFMINER_DETECTORS_H_
