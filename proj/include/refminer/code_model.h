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

#ifndef REFMINER_CODE_MODEL_H_
#define REFMINER_CODE_MODEL_H_

// Language-neutral model of one version of a C++ source file: classes,
// their attributes and operations, statement trees, and the inheritance
// edges between classes.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace refminer {

struct SourceLocation {
  std::string file_id;
  int start_line = 0;
  int start_column = 0;
  int end_line = 0;
  int end_column = 0;

  bool operator==(const SourceLocation &) const = default;

  // start <= end in (line, column) order.
  bool IsOrdered() const;
  // True if `inner` lies within this location (inclusive on both ends).
  bool Contains(const SourceLocation &inner) const;
};

struct TypeRef {
  std::string base_name;
  std::vector<TypeRef> template_args;
  bool is_const = false;
  int pointer_depth = 0;
  bool is_reference = false;

  bool operator==(const TypeRef &) const = default;
};

// Spelled form, e.g. "const std::vector<int>&".
std::string ToString(const TypeRef &type);

enum class Modifier : std::uint8_t {
  kStatic,
  kConst,
  kInline,
  kVirtual,
  kExplicit,
  kMutable,
  kConstexpr,
};

inline constexpr Modifier kAllModifiers[] = {
    Modifier::kStatic,   Modifier::kConst,   Modifier::kInline,
    Modifier::kVirtual,  Modifier::kExplicit, Modifier::kMutable,
    Modifier::kConstexpr};

std::string_view ToString(Modifier modifier);
std::optional<Modifier> ModifierFromString(std::string_view text);

// Duplicate-free set of modifiers, iterated in enumeration order.
class ModifierSet {
 public:
  ModifierSet() = default;
  ModifierSet(std::initializer_list<Modifier> modifiers);

  void Insert(Modifier m) { bits_ |= Bit(m); }
  void Erase(Modifier m) { bits_ &= static_cast<std::uint8_t>(~Bit(m)); }
  bool Contains(Modifier m) const { return (bits_ & Bit(m)) != 0; }
  bool Empty() const { return bits_ == 0; }
  std::vector<Modifier> ToVector() const;

  bool operator==(const ModifierSet &) const = default;

 private:
  static std::uint8_t Bit(Modifier m) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(m));
  }
  std::uint8_t bits_ = 0;
};

enum class Visibility : std::uint8_t { kPublic, kProtected, kPrivate };

std::string_view ToString(Visibility visibility);
std::optional<Visibility> VisibilityFromString(std::string_view text);

struct Parameter {
  std::string name;
  TypeRef type;
  int position = 0;
  std::optional<std::string> default_value;
  SourceLocation location;

  bool operator==(const Parameter &) const = default;
};

enum class StatementKind : std::uint8_t {
  kBlock,
  kIf,
  kFor,
  kWhile,
  kDo,
  kSwitch,
  kTry,
  kExpression,
  kDeclaration,
  kReturn,
  kBreak,
  kContinue,
};

std::string_view ToString(StatementKind kind);
std::optional<StatementKind> StatementKindFromString(std::string_view text);
bool IsLeaf(StatementKind kind);

struct VariableDecl {
  std::string name;
  TypeRef type;

  bool operator==(const VariableDecl &) const = default;
};

// One node of an operation body. For leaf kinds `text` is the normalized
// statement text; for composite kinds it is the header (condition or loop
// clause) text and the body lives in `children`.
struct Statement {
  StatementKind kind = StatementKind::kBlock;
  std::string text;
  std::vector<Statement> children;
  std::vector<VariableDecl> declared_variables;
  std::set<std::string> referenced_identifiers;
  SourceLocation location;

  bool IsLeaf() const { return refminer::IsLeaf(kind); }
  bool operator==(const Statement &) const = default;
};

// Leaves of `root` in pre-order.
std::vector<const Statement *> CollectLeaves(const Statement &root);

struct OperationDecl {
  std::string name;
  std::vector<Parameter> parameters;
  // Absent for constructors, destructors and conversion operators.
  std::optional<TypeRef> return_type;
  ModifierSet modifiers;
  Visibility visibility = Visibility::kPrivate;
  // Absent for declarations without a body (incl. "= default"/"= 0").
  std::optional<Statement> body;
  bool is_constructor = false;
  SourceLocation location;

  bool operator==(const OperationDecl &) const = default;
};

// "name(type,type)" -- identity of an operation inside its class.
std::string SignatureKey(const OperationDecl &op);

struct AttributeDecl {
  std::string name;
  TypeRef type;
  ModifierSet modifiers;
  Visibility visibility = Visibility::kPrivate;
  std::optional<std::string> initializer;
  SourceLocation location;

  bool operator==(const AttributeDecl &) const = default;
};

std::string SignatureKey(const AttributeDecl &attr);

enum class ClassKind : std::uint8_t { kClass, kStruct, kArtificial };

std::string_view ToString(ClassKind kind);
std::optional<ClassKind> ClassKindFromString(std::string_view text);

// Simple name of the synthetic class holding namespace-level functions and
// variables. '<' cannot start an identifier, so it never collides.
inline constexpr std::string_view kArtificialClassName = "<globals>";

struct ClassDecl {
  std::string simple_name;
  std::string package;
  ClassKind kind = ClassKind::kClass;
  std::vector<std::string> template_params;
  std::vector<AttributeDecl> attributes;
  std::vector<OperationDecl> operations;
  SourceLocation location;

  std::string QualifiedName() const;
  bool operator==(const ClassDecl &) const = default;
};

std::string QualifiedName(std::string_view package, std::string_view name);

struct Generalization {
  std::string child;
  std::string parent;

  bool operator==(const Generalization &) const = default;
};

struct CodeModel {
  std::string file_id;
  std::vector<ClassDecl> classes;
  std::vector<Generalization> generalizations;

  bool operator==(const CodeModel &) const = default;
};

const ClassDecl *LookupClass(const CodeModel &model,
                             std::string_view qualified_name);

// Resolves a generalization parent string against the model: tries the
// name relative to `context_package` and its enclosing packages, then as
// written. Template arguments are ignored. Returns the qualified name of a
// class in `model`, or nullopt for external parents.
std::optional<std::string> ResolveClassName(const CodeModel &model,
                                            std::string_view spelled,
                                            std::string_view context_package);

// True if a chain of generalizations leads from `descendant` to `ancestor`
// (both qualified names of classes in `model`).
bool InheritsFrom(const CodeModel &model, std::string_view descendant,
                  std::string_view ancestor);

// Lines covered by `loc`, inclusive.
std::vector<int> LineSpan(const SourceLocation &loc);

}  // namespace refminer

#endif  // REFMINER_CODE_MODEL_H_
