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

#include "refminer/code_model.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>

namespace refminer {

bool SourceLocation::IsOrdered() const {
  return std::pair(start_line, start_column) <= std::pair(end_line, end_column);
}

bool SourceLocation::Contains(const SourceLocation &inner) const {
  return std::pair(start_line, start_column) <=
             std::pair(inner.start_line, inner.start_column) &&
         std::pair(inner.end_line, inner.end_column) <=
             std::pair(end_line, end_column);
}

std::string ToString(const TypeRef &type) {
  std::string out;
  if (type.is_const) out += "const ";
  out += type.base_name;
  if (!type.template_args.empty()) {
    out += '<';
    for (size_t i = 0; i < type.template_args.size(); ++i) {
      if (i > 0) out += ',';
      out += ToString(type.template_args[i]);
    }
    out += '>';
  }
  out.append(static_cast<size_t>(type.pointer_depth), '*');
  if (type.is_reference) out += '&';
  return out;
}

namespace {

constexpr std::array<std::pair<Modifier, std::string_view>, 7> kModifierNames{{
    {Modifier::kStatic, "static"},
    {Modifier::kConst, "const"},
    {Modifier::kInline, "inline"},
    {Modifier::kVirtual, "virtual"},
    {Modifier::kExplicit, "explicit"},
    {Modifier::kMutable, "mutable"},
    {Modifier::kConstexpr, "constexpr"},
}};

constexpr std::array<std::pair<Visibility, std::string_view>, 3>
    kVisibilityNames{{
        {Visibility::kPublic, "public"},
        {Visibility::kProtected, "protected"},
        {Visibility::kPrivate, "private"},
    }};

constexpr std::array<std::pair<StatementKind, std::string_view>, 12>
    kStatementKindNames{{
        {StatementKind::kBlock, "block"},
        {StatementKind::kIf, "if"},
        {StatementKind::kFor, "for"},
        {StatementKind::kWhile, "while"},
        {StatementKind::kDo, "do"},
        {StatementKind::kSwitch, "switch"},
        {StatementKind::kTry, "try"},
        {StatementKind::kExpression, "expression"},
        {StatementKind::kDeclaration, "declaration"},
        {StatementKind::kReturn, "return"},
        {StatementKind::kBreak, "break"},
        {StatementKind::kContinue, "continue"},
    }};

constexpr std::array<std::pair<ClassKind, std::string_view>, 3>
    kClassKindNames{{
        {ClassKind::kClass, "class"},
        {ClassKind::kStruct, "struct"},
        {ClassKind::kArtificial, "artificial"},
    }};

template <typename Enum, size_t N>
std::string_view NameOf(const std::array<std::pair<Enum, std::string_view>, N>
                            &table,
                        Enum value) {
  for (const auto &[e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, size_t N>
std::optional<Enum> ValueOf(
    const std::array<std::pair<Enum, std::string_view>, N> &table,
    std::string_view text) {
  for (const auto &[e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(Modifier modifier) {
  return NameOf(kModifierNames, modifier);
}
std::optional<Modifier> ModifierFromString(std::string_view text) {
  return ValueOf(kModifierNames, text);
}
std::string_view ToString(Visibility visibility) {
  return NameOf(kVisibilityNames, visibility);
}
std::optional<Visibility> VisibilityFromString(std::string_view text) {
  return ValueOf(kVisibilityNames, text);
}
std::string_view ToString(StatementKind kind) {
  return NameOf(kStatementKindNames, kind);
}
std::optional<StatementKind> StatementKindFromString(std::string_view text) {
  return ValueOf(kStatementKindNames, text);
}
std::string_view ToString(ClassKind kind) {
  return NameOf(kClassKindNames, kind);
}
std::optional<ClassKind> ClassKindFromString(std::string_view text) {
  return ValueOf(kClassKindNames, text);
}

ModifierSet::ModifierSet(std::initializer_list<Modifier> modifiers) {
  for (Modifier m : modifiers) Insert(m);
}

std::vector<Modifier> ModifierSet::ToVector() const {
  std::vector<Modifier> out;
  for (Modifier m : kAllModifiers) {
    if (Contains(m)) out.push_back(m);
  }
  return out;
}

bool IsLeaf(StatementKind kind) {
  switch (kind) {
    case StatementKind::kExpression:
    case StatementKind::kDeclaration:
    case StatementKind::kReturn:
    case StatementKind::kBreak:
    case StatementKind::kContinue:
      return true;
    default:
      return false;
  }
}

std::vector<const Statement *> CollectLeaves(const Statement &root) {
  std::vector<const Statement *> out;
  std::function<void(const Statement &)> visit = [&](const Statement &s) {
    if (s.IsLeaf()) {
      out.push_back(&s);
      return;
    }
    for (const Statement &child : s.children) visit(child);
  };
  visit(root);
  return out;
}

std::string SignatureKey(const OperationDecl &op) {
  std::string key = op.name + "(";
  for (size_t i = 0; i < op.parameters.size(); ++i) {
    if (i > 0) key += ',';
    key += ToString(op.parameters[i].type);
  }
  key += ')';
  return key;
}

std::string SignatureKey(const AttributeDecl &attr) {
  return attr.name + ":" + ToString(attr.type);
}

std::string QualifiedName(std::string_view package, std::string_view name) {
  if (package.empty()) return std::string(name);
  std::string out(package);
  out += "::";
  out += name;
  return out;
}

std::string ClassDecl::QualifiedName() const {
  return refminer::QualifiedName(package, simple_name);
}

const ClassDecl *LookupClass(const CodeModel &model,
                             std::string_view qualified_name) {
  for (const ClassDecl &c : model.classes) {
    if (c.QualifiedName() == qualified_name) return &c;
  }
  return nullptr;
}

namespace {

std::string StripTemplateArgs(std::string_view spelled) {
  std::string out;
  int depth = 0;
  for (char ch : spelled) {
    if (ch == '<') {
      ++depth;
    } else if (ch == '>') {
      --depth;
    } else if (depth == 0) {
      out += ch;
    }
  }
  if (out.rfind("::", 0) == 0) out.erase(0, 2);
  return out;
}

}  // namespace

std::optional<std::string> ResolveClassName(const CodeModel &model,
                                            std::string_view spelled,
                                            std::string_view context_package) {
  const std::string name = StripTemplateArgs(spelled);
  std::string package(context_package);
  while (true) {
    std::string candidate = refminer::QualifiedName(package, name);
    if (LookupClass(model, candidate) != nullptr) return candidate;
    if (package.empty()) break;
    const size_t cut = package.rfind("::");
    package = cut == std::string::npos ? "" : package.substr(0, cut);
  }
  return std::nullopt;
}

bool InheritsFrom(const CodeModel &model, std::string_view descendant,
                  std::string_view ancestor) {
  std::map<std::string, std::vector<std::string>> parents;
  for (const Generalization &g : model.generalizations) {
    const ClassDecl *child = LookupClass(model, g.child);
    const std::string package = child != nullptr ? child->package : "";
    if (auto resolved = ResolveClassName(model, g.parent, package)) {
      parents[g.child].push_back(*resolved);
    }
  }
  std::vector<std::string> stack{std::string(descendant)};
  std::set<std::string> seen;
  while (!stack.empty()) {
    std::string current = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(current).second) continue;
    for (const std::string &parent : parents[current]) {
      if (parent == ancestor) return true;
      stack.push_back(parent);
    }
  }
  return false;
}

std::vector<int> LineSpan(const SourceLocation &loc) {
  std::vector<int> lines;
  for (int l = loc.start_line; l <= loc.end_line; ++l) lines.push_back(l);
  return lines;
}

}  // namespace refminer
