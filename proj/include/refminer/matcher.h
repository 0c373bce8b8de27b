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

#ifndef REFMINER_MATCHER_H_
#define REFMINER_MATCHER_H_

// Aligns two code models: classes first, then their members, then the
// statements of matched operation bodies.
//
// All pointers in the result refer into the two CodeModels passed to
// MatchModels, which must outlive the ModelDiff.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "refminer/code_model.h"

namespace refminer {

// Class pairs scoring below this are not matched.
inline constexpr double kClassMatchThreshold = 0.5;
// Minimum body similarity for pairing operations with different names, and
// for move/rename detection.
inline constexpr double kBodySimilarityThreshold = 0.5;

using RenameMap = std::map<std::string, std::string>;

enum class MatchKind { kExact, kRenamedIdentifier, kModified };

std::string_view ToString(MatchKind kind);

struct StatementMapping {
  const Statement *before = nullptr;
  const Statement *after = nullptr;
  MatchKind kind = MatchKind::kExact;
  // Substitutions (old -> new) that made the texts equal; non-empty only
  // for kRenamedIdentifier.
  std::vector<std::pair<std::string, std::string>> applied;
};

// A parameter or local variable of the before-body paired with one of the
// after-body. Names may be equal.
struct VariableCorrespondence {
  enum class Origin { kParameter, kLocal };
  Origin origin = Origin::kParameter;
  std::string before_name;
  std::string after_name;
  TypeRef before_type;
  TypeRef after_type;
  // Parameter location, or location of the declaring statement.
  SourceLocation before_location;
  SourceLocation after_location;
};

struct BodyMatch {
  std::vector<StatementMapping> mappings;
  // Identifier substitution inferred for this operation pair, including
  // any renames supplied by the caller.
  RenameMap substitutions;
  std::vector<VariableCorrespondence> variables;
  std::vector<const Statement *> unmatched_before;  // leaves only
  std::vector<const Statement *> unmatched_after;   // leaves only
  int leaves_before = 0;
  int leaves_after = 0;

  // Share of leaves matched exactly or by renaming, over the larger body.
  // Zero when both bodies are empty.
  double Similarity() const;
};

// Statement alignment of two operation bodies. `context` holds renames known
// from the enclosing comparison (class, method and field renames); they are
// applied after the parameter and local-variable correspondences.
BodyMatch MatchOperationBodies(const OperationDecl &before,
                               const OperationDecl &after,
                               const RenameMap &context = {});

// |S_a ∩ S_b| / max(|S_a|, |S_b|, 1) over member signature keys; 1.0 when
// both classes are empty. Constructors and destructors are keyed by role
// and parameter types, not by name.
double MemberSimilarity(const ClassDecl &a, const ClassDecl &b);

struct OperationMatch {
  const OperationDecl *before = nullptr;
  const OperationDecl *after = nullptr;
  double score = 0.0;
  bool signature_changed = false;
  BodyMatch body;
};

struct AttributeMatch {
  const AttributeDecl *before = nullptr;
  const AttributeDecl *after = nullptr;
  double score = 0.0;
};

struct ClassMatch {
  const ClassDecl *before = nullptr;
  const ClassDecl *after = nullptr;
  double score = 0.0;

  std::vector<AttributeMatch> attributes;
  std::vector<OperationMatch> operations;
  std::vector<const AttributeDecl *> added_attributes;
  std::vector<const AttributeDecl *> removed_attributes;
  std::vector<const OperationDecl *> added_operations;
  std::vector<const OperationDecl *> removed_operations;
};

struct ModelDiff {
  std::vector<ClassMatch> class_matches;
  std::vector<const ClassDecl *> added_classes;
  std::vector<const ClassDecl *> removed_classes;
  // Renames found at class/member level, applied to every body comparison.
  RenameMap global_renames;

  const ClassMatch *FindByAfter(const ClassDecl *after) const;
  const ClassMatch *FindByBefore(const ClassDecl *before) const;
};

ModelDiff MatchModels(const CodeModel &before, const CodeModel &after);

// Rewrites identifiers of a normalized statement text. Member names after
// "." or "->" are left alone unless the object is `this`.
std::string ApplyRenames(const std::string &normalized_text,
                         const RenameMap &renames);

}  // namespace refminer

#endif  // REFMINER_MATCHER_H_
