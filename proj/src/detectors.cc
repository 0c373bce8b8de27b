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

#include "refminer/detectors.h"

#include <algorithm>
#include <functional>
#include <tuple>

#include "refminer/lexer.h"

namespace refminer {

namespace {

struct TypeInfo {
  RefactoringType type;
  std::string_view id;
  std::string_view words;
};

constexpr TypeInfo kTypeInfo[] = {
    {RefactoringType::kRenameClass, "RenameClass", "Rename Class"},
    {RefactoringType::kMoveClass, "MoveClass", "Move Class"},
    {RefactoringType::kRenameMethod, "RenameMethod", "Rename Method"},
    {RefactoringType::kMoveMethod, "MoveMethod", "Move Method"},
    {RefactoringType::kPullUpMethod, "PullUpMethod", "Pull Up Method"},
    {RefactoringType::kExtractMethod, "ExtractMethod", "Extract Method"},
    {RefactoringType::kInlineMethod, "InlineMethod", "Inline Method"},
    {RefactoringType::kExtractAndMoveMethod, "ExtractAndMoveMethod",
     "Extract And Move Method"},
    {RefactoringType::kRenameParameter, "RenameParameter", "Rename Parameter"},
    {RefactoringType::kRenameVariable, "RenameVariable", "Rename Variable"},
    {RefactoringType::kRenameField, "RenameField", "Rename Field"},
    {RefactoringType::kMoveField, "MoveField", "Move Field"},
    {RefactoringType::kPullUpField, "PullUpField", "Pull Up Field"},
    {RefactoringType::kChangeParameterType, "ChangeParameterType",
     "Change Parameter Type"},
    {RefactoringType::kChangeReturnType, "ChangeReturnType",
     "Change Return Type"},
    {RefactoringType::kChangeVariableType, "ChangeVariableType",
     "Change Variable Type"},
    {RefactoringType::kChangeFieldType, "ChangeFieldType", "Change Field Type"},
    {RefactoringType::kAddMethodModifier, "AddMethodModifier",
     "Add Method Modifier"},
    {RefactoringType::kRemoveMethodModifier, "RemoveMethodModifier",
     "Remove Method Modifier"},
    {RefactoringType::kAddAttributeModifier, "AddAttributeModifier",
     "Add Attribute Modifier"},
    {RefactoringType::kRemoveAttributeModifier, "RemoveAttributeModifier",
     "Remove Attribute Modifier"},
};

const TypeInfo &Info(RefactoringType type) {
  for (const TypeInfo &info : kTypeInfo) {
    if (info.type == type) return info;
  }
  return kTypeInfo[0];
}

bool IsDestructor(const OperationDecl &op) {
  return !op.name.empty() && op.name.front() == '~';
}

TypeRef Renamed(const TypeRef &type, const RenameMap &renames) {
  TypeRef out = type;
  const size_t colon = out.base_name.rfind("::");
  const std::string prefix =
      colon == std::string::npos ? "" : out.base_name.substr(0, colon + 2);
  const std::string last = colon == std::string::npos
                               ? out.base_name
                               : out.base_name.substr(colon + 2);
  if (auto it = renames.find(last); it != renames.end()) {
    out.base_name = prefix + it->second;
  }
  for (TypeRef &arg : out.template_args) arg = Renamed(arg, renames);
  return out;
}

bool SameType(const TypeRef &before, const TypeRef &after,
              const RenameMap &renames) {
  return Renamed(before, renames) == after;
}

std::vector<int> Lines(const SourceLocation &loc) { return LineSpan(loc); }

// Header lines of an operation: from its start to the opening brace.
std::vector<int> DeclarationLines(const OperationDecl &op) {
  SourceLocation loc = op.location;
  if (op.body) loc.end_line = op.body->location.start_line;
  return LineSpan(loc);
}

std::vector<const Statement *> AllStatements(const OperationDecl &op) {
  std::vector<const Statement *> out;
  if (!op.body) return out;
  std::function<void(const Statement &)> visit = [&](const Statement &s) {
    out.push_back(&s);
    for (const Statement &c : s.children) visit(c);
  };
  visit(*op.body);
  return out;
}

// Finds a call to `name` in `op`. On success fills `args` with
// parameter -> argument for arguments that are plain identifiers.
bool FindCall(const OperationDecl &op, const OperationDecl &callee,
              RenameMap *args) {
  for (const Statement *s : AllStatements(op)) {
    if (!s->referenced_identifiers.contains(callee.name) &&
        s->text.find(callee.name) == std::string::npos) {
      continue;
    }
    const std::vector<Token> tokens = Tokenize(s->text, "");
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].text != callee.name || !tokens[i + 1].Is("(")) continue;
      std::vector<std::vector<const Token *>> list(1);
      int depth = 0;
      size_t j = i + 2;
      for (; j < tokens.size(); ++j) {
        const Token &t = tokens[j];
        if (t.Is("(") || t.Is("[") || t.Is("{")) ++depth;
        if (t.Is(")") || t.Is("]") || t.Is("}")) {
          if (depth == 0) break;
          --depth;
        }
        if (depth == 0 && t.Is(",")) {
          list.emplace_back();
          continue;
        }
        list.back().push_back(&t);
      }
      if (list.size() == 1 && list[0].empty()) list.clear();
      if (list.size() != callee.parameters.size()) continue;
      if (args != nullptr) {
        args->clear();
        for (size_t k = 0; k < list.size(); ++k) {
          const std::string &param = callee.parameters[k].name;
          if (list[k].size() == 1 && list[k][0]->IsIdentifier() &&
              !param.empty() && param != list[k][0]->text) {
            (*args)[param] = list[k][0]->text;
          }
        }
      }
      return true;
    }
  }
  return false;
}

std::multiset<std::string> LeafTexts(const OperationDecl &op,
                                     const RenameMap &renames) {
  std::multiset<std::string> out;
  if (!op.body) return out;
  for (const Statement *leaf : CollectLeaves(*op.body)) {
    out.insert(renames.empty() ? leaf->text : ApplyRenames(leaf->text, renames));
  }
  return out;
}

// Number of leaves of `moved` (rewritten by `args`) found in `pool`.
int CountMovedLeaves(const OperationDecl &moved, const RenameMap &args,
                     std::multiset<std::string> pool) {
  int found = 0;
  if (!moved.body) return 0;
  for (const Statement *leaf : CollectLeaves(*moved.body)) {
    const std::string text = ApplyRenames(leaf->text, args);
    if (auto it = pool.find(text); it != pool.end()) {
      pool.erase(it);
      ++found;
    }
  }
  return found;
}

std::multiset<std::string> Difference(const std::multiset<std::string> &a,
                                      const std::multiset<std::string> &b) {
  std::multiset<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

class Detector {
 public:
  Detector(const ModelDiff &diff, const CodeModel &before,
           const CodeModel &after)
      : diff_(diff), before_(before), after_(after) {}

  Detection Run() {
    for (const ClassMatch &cm : diff_.class_matches) {
      DetectClass(cm);
      for (const AttributeMatch &am : cm.attributes) DetectAttribute(cm, am);
      for (const OperationMatch &om : cm.operations) DetectOperation(cm, om);
    }
    DetectMoves();
    DetectExtractAndInline();
    std::sort(result_.refactorings.begin(), result_.refactorings.end(),
              [](const Refactoring &a, const Refactoring &b) {
                return std::make_tuple(a.after_location.start_line,
                                       a.after_location.start_column,
                                       ToString(a.type), a.detail) <
                       std::make_tuple(b.after_location.start_line,
                                       b.after_location.start_column,
                                       ToString(b.type), b.detail);
              });
    return std::move(result_);
  }

 private:
  void Emit(RefactoringType type, std::string description,
            const SourceLocation &before_loc, const SourceLocation &after_loc,
            std::vector<int> lines, Detail detail) {
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    if (lines.empty()) lines = LineSpan(after_loc);
    result_.refactorings.push_back(Refactoring{type, std::move(description),
                                               before_loc, after_loc,
                                               std::move(lines),
                                               std::move(detail)});
  }

  void DetectClass(const ClassMatch &cm) {
    if (cm.before->kind == ClassKind::kArtificial) return;
    const std::vector<int> line{cm.after->location.start_line};
    if (cm.before->simple_name != cm.after->simple_name) {
      Emit(RefactoringType::kRenameClass,
           "Rename Class " + cm.before->QualifiedName() + " renamed to " +
               cm.after->QualifiedName(),
           cm.before->location, cm.after->location, line,
           {{"before", cm.before->QualifiedName()},
            {"after", cm.after->QualifiedName()}});
    }
    if (cm.before->package != cm.after->package) {
      Emit(RefactoringType::kMoveClass,
           "Move Class " + cm.before->QualifiedName() + " moved to " +
               cm.after->QualifiedName(),
           cm.before->location, cm.after->location, line,
           {{"class", cm.after->simple_name},
            {"fromPackage", cm.before->package},
            {"toPackage", cm.after->package}});
    }
  }

  void DetectAttribute(const ClassMatch &cm, const AttributeMatch &am) {
    const AttributeDecl &b = *am.before;
    const AttributeDecl &a = *am.after;
    const std::string cls = cm.after->QualifiedName();
    const std::vector<int> decl = Lines(a.location);
    if (b.name != a.name) {
      std::vector<int> lines = decl;
      const std::pair<std::string, std::string> rename{b.name, a.name};
      for (const OperationMatch &om : cm.operations) {
        for (const StatementMapping &m : om.body.mappings) {
          if (std::find(m.applied.begin(), m.applied.end(), rename) !=
              m.applied.end()) {
            const std::vector<int> used = Lines(m.after->location);
            lines.insert(lines.end(), used.begin(), used.end());
          }
        }
      }
      Emit(RefactoringType::kRenameField,
           "Rename Attribute " + b.name + " to " + a.name + " in class " + cls,
           b.location, a.location, lines,
           {{"class", cls}, {"before", b.name}, {"after", a.name}});
    }
    if (!SameType(b.type, a.type, diff_.global_renames)) {
      Emit(RefactoringType::kChangeFieldType,
           "Change Attribute Type " + b.name + " : " + ToString(b.type) +
               " to " + a.name + " : " + ToString(a.type) + " in class " + cls,
           b.location, a.location, decl,
           {{"class", cls},
            {"field", a.name},
            {"before", ToString(b.type)},
            {"after", ToString(a.type)}});
    }
    ModifierFindings(b.modifiers, a.modifiers,
                     RefactoringType::kAddAttributeModifier,
                     RefactoringType::kRemoveAttributeModifier, "attribute",
                     "field", a.name, cls, b.location, a.location, decl);
  }

  void ModifierFindings(const ModifierSet &before, const ModifierSet &after,
                        RefactoringType add, RefactoringType remove,
                        const std::string &noun, const std::string &key,
                        const std::string &member, const std::string &cls,
                        const SourceLocation &before_loc,
                        const SourceLocation &after_loc,
                        const std::vector<int> &lines) {
    for (Modifier m : kAllModifiers) {
      const bool had = before.Contains(m);
      const bool has = after.Contains(m);
      if (had == has) continue;
      const std::string token(ToString(m));
      const RefactoringType type = has ? add : remove;
      Emit(type,
           DisplayName(type) + " " + token + " in " + noun + " " + member +
               " in class " + cls,
           before_loc, after_loc, lines,
           {{"class", cls}, {key, member}, {"modifier", token}});
    }
  }

  void DetectOperation(const ClassMatch &cm, const OperationMatch &om) {
    const OperationDecl &b = *om.before;
    const OperationDecl &a = *om.after;
    const std::string cls = cm.after->QualifiedName();
    const std::vector<int> decl = DeclarationLines(a);
    const bool special = b.is_constructor || IsDestructor(b);
    if (!special && b.name != a.name &&
        om.body.Similarity() >= kBodySimilarityThreshold) {
      Emit(RefactoringType::kRenameMethod,
           "Rename Method " + SignatureKey(b) + " renamed to " +
               SignatureKey(a) + " in class " + cls,
           b.location, a.location, decl,
           {{"class", cls}, {"before", b.name}, {"after", a.name}});
    }
    if (b.return_type && a.return_type &&
        !SameType(*b.return_type, *a.return_type, diff_.global_renames)) {
      Emit(RefactoringType::kChangeReturnType,
           "Change Return Type " + ToString(*b.return_type) + " to " +
               ToString(*a.return_type) + " in method " + a.name +
               " in class " + cls,
           b.location, a.location, decl,
           {{"class", cls},
            {"method", a.name},
            {"before", ToString(*b.return_type)},
            {"after", ToString(*a.return_type)}});
    }
    ModifierFindings(b.modifiers, a.modifiers,
                     RefactoringType::kAddMethodModifier,
                     RefactoringType::kRemoveMethodModifier, "method",
                     "method", a.name, cls, b.location, a.location, decl);

    for (const VariableCorrespondence &v : om.body.variables) {
      const bool param =
          v.origin == VariableCorrespondence::Origin::kParameter;
      const std::string noun = param ? "Parameter" : "Variable";
      const std::string key = param ? "parameter" : "variable";
      const std::vector<int> vdecl = Lines(v.after_location);
      if (v.before_name != v.after_name) {
        std::vector<int> lines = vdecl;
        const std::pair<std::string, std::string> rename{v.before_name,
                                                         v.after_name};
        for (const StatementMapping &m : om.body.mappings) {
          if (!m.before->IsLeaf()) continue;
          if (std::find(m.applied.begin(), m.applied.end(), rename) !=
              m.applied.end()) {
            const std::vector<int> used = Lines(m.after->location);
            lines.insert(lines.end(), used.begin(), used.end());
          }
        }
        const RefactoringType type = param ? RefactoringType::kRenameParameter
                                           : RefactoringType::kRenameVariable;
        Emit(type,
             "Rename " + noun + " " + v.before_name + " to " + v.after_name +
                 " in method " + a.name + " in class " + cls,
             v.before_location, v.after_location, lines,
             {{"class", cls},
              {"method", a.name},
              {"before", v.before_name},
              {"after", v.after_name}});
      }
      if (!SameType(v.before_type, v.after_type, diff_.global_renames)) {
        const RefactoringType type =
            param ? RefactoringType::kChangeParameterType
                  : RefactoringType::kChangeVariableType;
        Emit(type,
             "Change " + noun + " Type " + v.after_name + " : " +
                 ToString(v.before_type) + " to " + ToString(v.after_type) +
                 " in method " + a.name + " in class " + cls,
             v.before_location, v.after_location, vdecl,
             {{"class", cls},
              {"method", a.name},
              {key, v.after_name},
              {"before", ToString(v.before_type)},
              {"after", ToString(v.after_type)}});
      }
    }
  }

  bool IsPullUp(const ClassMatch &from, const ClassMatch &to) const {
    return InheritsFrom(after_, from.after->QualifiedName(),
                        to.after->QualifiedName());
  }

  void DetectMoves() {
    struct Candidate {
      double score;
      size_t from, to;
      const OperationDecl *removed;
      const OperationDecl *added;
    };
    const auto &matches = diff_.class_matches;
    std::vector<Candidate> candidates;
    for (size_t x = 0; x < matches.size(); ++x) {
      for (const OperationDecl *r : matches[x].removed_operations) {
        for (size_t y = 0; y < matches.size(); ++y) {
          if (x == y) continue;
          for (const OperationDecl *a : matches[y].added_operations) {
            if (r->is_constructor || a->is_constructor) continue;
            double score = 0.0;
            if (!r->body && !a->body) {
              score = r->name == a->name && SignatureKey(*r) == SignatureKey(*a)
                          ? 1.0
                          : 0.0;
            } else {
              score = MatchOperationBodies(*r, *a, diff_.global_renames)
                          .Similarity();
            }
            if (score >= kBodySimilarityThreshold) {
              candidates.push_back({score, x, y, r, a});
            }
          }
        }
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate &p, const Candidate &q) {
                       if (p.score != q.score) return p.score > q.score;
                       return (p.removed->name == p.added->name) &&
                              (q.removed->name != q.added->name);
                     });
    for (const Candidate &c : candidates) {
      if (result_.consumed_removed.contains(c.removed) ||
          result_.consumed_added.contains(c.added)) {
        continue;
      }
      result_.consumed_removed.insert(c.removed);
      result_.consumed_added.insert(c.added);
      const ClassMatch &from = matches[c.from];
      const ClassMatch &to = matches[c.to];
      const bool pull_up = IsPullUp(from, to);
      const RefactoringType type =
          pull_up ? RefactoringType::kPullUpMethod : RefactoringType::kMoveMethod;
      Emit(type,
           DisplayName(type) + " " + SignatureKey(*c.added) + " from class " +
               from.after->QualifiedName() + " to class " +
               to.after->QualifiedName(),
           c.removed->location, c.added->location, Lines(c.added->location),
           {{"method", c.added->name},
            {"fromClass", from.after->QualifiedName()},
            {"toClass", to.after->QualifiedName()}});
    }

    std::set<const AttributeDecl *> used_removed, used_added;
    for (size_t x = 0; x < matches.size(); ++x) {
      for (const AttributeDecl *r : matches[x].removed_attributes) {
        for (size_t y = 0; y < matches.size(); ++y) {
          if (x == y || used_removed.contains(r)) continue;
          for (const AttributeDecl *a : matches[y].added_attributes) {
            if (used_added.contains(a) ||
                SignatureKey(*r) != SignatureKey(*a)) {
              continue;
            }
            used_removed.insert(r);
            used_added.insert(a);
            const bool pull_up = IsPullUp(matches[x], matches[y]);
            const RefactoringType type = pull_up ? RefactoringType::kPullUpField
                                                 : RefactoringType::kMoveField;
            const std::string from = matches[x].after->QualifiedName();
            const std::string to = matches[y].after->QualifiedName();
            Emit(type,
                 DisplayName(type) + " " + a->name + " : " +
                     ToString(a->type) + " from class " + from + " to class " +
                     to,
                 r->location, a->location, Lines(a->location),
                 {{"field", a->name}, {"fromClass", from}, {"toClass", to}});
            break;
          }
        }
      }
    }
  }

  struct Owned {
    const OperationDecl *op;
    const ClassDecl *cls;
  };

  void DetectExtractAndInline() {
    std::vector<Owned> added, removed;
    for (const ClassMatch &cm : diff_.class_matches) {
      for (const OperationDecl *op : cm.added_operations) {
        if (!result_.consumed_added.contains(op)) added.push_back({op, cm.after});
      }
      for (const OperationDecl *op : cm.removed_operations) {
        if (!result_.consumed_removed.contains(op)) {
          removed.push_back({op, cm.before});
        }
      }
    }
    for (const ClassDecl *cls : diff_.added_classes) {
      for (const OperationDecl &op : cls->operations) added.push_back({&op, cls});
    }
    for (const ClassDecl *cls : diff_.removed_classes) {
      for (const OperationDecl &op : cls->operations) {
        removed.push_back({&op, cls});
      }
    }

    for (const ClassMatch &cm : diff_.class_matches) {
      for (const OperationMatch &om : cm.operations) {
        const std::multiset<std::string> before_texts =
            LeafTexts(*om.before, om.body.substitutions);
        const std::multiset<std::string> after_texts =
            LeafTexts(*om.after, {});
        const std::multiset<std::string> gone =
            Difference(before_texts, after_texts);
        const std::multiset<std::string> fresh =
            Difference(after_texts, before_texts);

        for (const Owned &b : added) {
          if (b.op == om.after) continue;
          RenameMap args;
          if (!FindCall(*om.after, *b.op, &args)) continue;
          if (CountMovedLeaves(*b.op, args, gone) < 1) continue;
          result_.consumed_added.insert(b.op);
          result_.extract_sources.insert(om.after);
          const std::string src_cls = cm.after->QualifiedName();
          const std::string dst_cls = b.cls->QualifiedName();
          std::vector<int> lines = Lines(om.after->location);
          const std::vector<int> extracted = Lines(b.op->location);
          lines.insert(lines.end(), extracted.begin(), extracted.end());
          if (b.cls == cm.after) {
            Emit(RefactoringType::kExtractMethod,
                 "Extract Method " + SignatureKey(*b.op) + " extracted from " +
                     SignatureKey(*om.after) + " in class " + src_cls,
                 om.before->location, b.op->location, lines,
                 {{"class", src_cls},
                  {"source", om.after->name},
                  {"extracted", b.op->name}});
          } else {
            Emit(RefactoringType::kExtractAndMoveMethod,
                 "Extract And Move Method " + SignatureKey(*b.op) +
                     " extracted from " + SignatureKey(*om.after) +
                     " in class " + src_cls + " & moved to class " + dst_cls,
                 om.before->location, b.op->location, lines,
                 {{"sourceClass", src_cls},
                  {"source", om.after->name},
                  {"targetClass", dst_cls},
                  {"extracted", b.op->name}});
          }
        }

        for (const Owned &b : removed) {
          if (b.op == om.before) continue;
          RenameMap args;
          if (!FindCall(*om.before, *b.op, &args)) continue;
          // Parameters become caller identifiers first, then those are
          // renamed into the after version.
          RenameMap rewritten;
          for (const auto &[param, arg] : args) {
            auto it = om.body.substitutions.find(arg);
            rewritten[param] = it != om.body.substitutions.end() ? it->second
                                                                 : arg;
          }
          for (const auto &[k, v] : om.body.substitutions) {
            rewritten.emplace(k, v);
          }
          if (CountMovedLeaves(*b.op, rewritten, fresh) < 1) continue;
          result_.consumed_removed.insert(b.op);
          result_.inline_targets.insert(om.after);
          const std::string cls = cm.after->QualifiedName();
          Emit(RefactoringType::kInlineMethod,
               "Inline Method " + SignatureKey(*b.op) + " inlined to " +
                   SignatureKey(*om.after) + " in class " + cls,
               b.op->location, om.after->location, Lines(om.after->location),
               {{"class", cls},
                {"target", om.after->name},
                {"inlined", b.op->name}});
        }
      }
    }
  }

  const ModelDiff &diff_;
  const CodeModel &before_;
  const CodeModel &after_;
  Detection result_;
};

}  // namespace

std::string_view ToString(RefactoringType type) { return Info(type).id; }

std::optional<RefactoringType> RefactoringTypeFromString(std::string_view s) {
  for (const TypeInfo &info : kTypeInfo) {
    if (info.id == s) return info.type;
  }
  return std::nullopt;
}

std::string DisplayName(RefactoringType type) {
  return std::string(Info(type).words);
}

Detection Detect(const ModelDiff &diff, const CodeModel &before,
                 const CodeModel &after) {
  return Detector(diff, before, after).Run();
}

}  // namespace refminer
