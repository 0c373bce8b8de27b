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

#include "refminer/behavior.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace refminer {

std::string_view ToString(BehaviorChangeKind kind) {
  switch (kind) {
    case BehaviorChangeKind::kMethodAdded:
      return "method-added";
    case BehaviorChangeKind::kMethodRemoved:
      return "method-removed";
    case BehaviorChangeKind::kStatementModified:
      return "statement-modified";
    case BehaviorChangeKind::kStatementAdded:
      return "statement-added";
    case BehaviorChangeKind::kStatementRemoved:
      return "statement-removed";
  }
  return "?";
}

std::optional<BehaviorChangeKind> BehaviorChangeKindFromString(
    std::string_view s) {
  for (BehaviorChangeKind k :
       {BehaviorChangeKind::kMethodAdded, BehaviorChangeKind::kMethodRemoved,
        BehaviorChangeKind::kStatementModified,
        BehaviorChangeKind::kStatementAdded,
        BehaviorChangeKind::kStatementRemoved}) {
    if (ToString(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

bool InAfterFile(BehaviorChangeKind kind) {
  return kind != BehaviorChangeKind::kMethodRemoved &&
         kind != BehaviorChangeKind::kStatementRemoved;
}

class Reporter {
 public:
  Reporter(const ModelDiff &diff, const Detection &detection)
      : diff_(diff), detection_(detection) {
    for (const Refactoring &r : detection.refactorings) {
      claimed_.insert(r.affected_lines.begin(), r.affected_lines.end());
    }
  }

  std::vector<BehaviorChange> Run() {
    for (const ClassMatch &cm : diff_.class_matches) {
      for (const OperationDecl *op : cm.added_operations) AddedMethod(op);
      for (const OperationDecl *op : cm.removed_operations) RemovedMethod(op);
      for (const OperationMatch &om : cm.operations) Statements(om);
    }
    for (const ClassDecl *cls : diff_.added_classes) {
      for (const OperationDecl &op : cls->operations) AddedMethod(&op);
    }
    for (const ClassDecl *cls : diff_.removed_classes) {
      for (const OperationDecl &op : cls->operations) RemovedMethod(&op);
    }
    std::sort(out_.begin(), out_.end(),
              [](const BehaviorChange &a, const BehaviorChange &b) {
                return std::make_tuple(a.first_line, a.last_line, a.kind) <
                       std::make_tuple(b.first_line, b.last_line, b.kind);
              });
    return std::move(out_);
  }

 private:
  void Add(BehaviorChangeKind kind, const SourceLocation &loc, int first,
           int last) {
    if (InAfterFile(kind)) {
      for (int line = first; line <= last; ++line) {
        if (claimed_.contains(line)) return;
      }
    }
    out_.push_back(BehaviorChange{kind, loc, first, last});
  }

  void AddedMethod(const OperationDecl *op) {
    if (detection_.consumed_added.contains(op)) return;
    Add(BehaviorChangeKind::kMethodAdded, op->location,
        op->location.start_line, op->location.end_line);
  }

  void RemovedMethod(const OperationDecl *op) {
    if (detection_.consumed_removed.contains(op)) return;
    Add(BehaviorChangeKind::kMethodRemoved, op->location,
        op->location.start_line, op->location.end_line);
  }

  void Statements(const OperationMatch &om) {
    for (const StatementMapping &m : om.body.mappings) {
      if (m.kind != MatchKind::kModified) continue;
      const SourceLocation &loc = m.after->location;
      // Composite statements contribute their header line only.
      const int last = m.after->IsLeaf() ? loc.end_line : loc.start_line;
      Add(BehaviorChangeKind::kStatementModified, loc, loc.start_line, last);
    }
    if (!detection_.inline_targets.contains(om.after)) {
      for (const Statement *s : om.body.unmatched_after) {
        Add(BehaviorChangeKind::kStatementAdded, s->location,
            s->location.start_line, s->location.end_line);
      }
    }
    if (!detection_.extract_sources.contains(om.after)) {
      for (const Statement *s : om.body.unmatched_before) {
        Add(BehaviorChangeKind::kStatementRemoved, s->location,
            s->location.start_line, s->location.end_line);
      }
    }
  }

  const ModelDiff &diff_;
  const Detection &detection_;
  std::set<int> claimed_;
  std::vector<BehaviorChange> out_;
};

}  // namespace

std::vector<BehaviorChange> ReportBehaviorChanges(const ModelDiff &diff,
                                                  const Detection &detection) {
  return Reporter(diff, detection).Run();
}

}  // namespace refminer
