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

#include "refminer/parser.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_set>

namespace refminer {
namespace {

bool IsFundamentalKeyword(std::string_view t) {
  static const std::unordered_set<std::string_view> kFundamental = {
      "void",     "bool",     "char",    "char8_t", "char16_t", "char32_t",
      "wchar_t",  "short",    "int",     "long",    "signed",   "unsigned",
      "float",    "double",   "auto"};
  return kFundamental.contains(t);
}

bool Glues(const Token &t) {
  if (t.kind != TokenKind::kPunctuator) return false;
  static const std::unordered_set<std::string_view> kGlue = {
      "::", "(", ")", ",", ".", "->", "[", "]"};
  return kGlue.contains(t.text);
}

bool Adjacent(const Token &a, const Token &b) {
  return a.location.end_line == b.location.start_line &&
         a.location.end_column + 1 == b.location.start_column;
}

struct DeclSpecs {
  ModifierSet modifiers;
  bool leading_const = false;
};

struct MemberResult {
  std::vector<AttributeDecl> attributes;
  std::optional<OperationDecl> operation;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file_id)
      : toks_(std::move(tokens)), file_id_(std::move(file_id)) {
    std::erase_if(toks_, [](const Token &t) {
      return t.kind == TokenKind::kComment;
    });
    eof_.kind = TokenKind::kPunctuator;
    eof_.text = "";
    if (!toks_.empty()) {
      eof_.location = toks_.back().location;
      eof_.location.start_line = eof_.location.end_line;
      eof_.location.start_column = eof_.location.end_column;
    } else {
      eof_.location = SourceLocation{file_id_, 1, 1, 1, 1};
    }
  }

  CodeModel Run() {
    model_.file_id = file_id_;
    ParseDeclarationSeq(/*braced=*/false);
    for (auto &[package, index] : artificial_) {
      ClassDecl &cls = model_.classes[index];
      bool first = true;
      auto widen = [&](const SourceLocation &loc) {
        if (first) {
          cls.location = loc;
          first = false;
          return;
        }
        if (std::pair(loc.start_line, loc.start_column) <
            std::pair(cls.location.start_line, cls.location.start_column)) {
          cls.location.start_line = loc.start_line;
          cls.location.start_column = loc.start_column;
        }
        if (std::pair(loc.end_line, loc.end_column) >
            std::pair(cls.location.end_line, cls.location.end_column)) {
          cls.location.end_line = loc.end_line;
          cls.location.end_column = loc.end_column;
        }
      };
      for (const AttributeDecl &a : cls.attributes) widen(a.location);
      for (const OperationDecl &o : cls.operations) widen(o.location);
    }
    return std::move(model_);
  }

 private:
  // ---- token access ----

  bool AtEnd() const { return pos_ >= toks_.size(); }
  const Token &At(size_t i) const { return i < toks_.size() ? toks_[i] : eof_; }
  const Token &Cur() const { return At(pos_); }
  const Token &Ahead(size_t n) const { return At(pos_ + n); }
  bool Check(std::string_view text) const { return Cur().Is(text); }
  bool Accept(std::string_view text) {
    if (!Check(text)) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void Fail(const std::string &message) const {
    throw ParseError(Cur().location, message + (AtEnd() ? " at end of input"
                                                        : ", found '" +
                                                              Cur().text + "'"));
  }
  [[noreturn]] void Unsupported(size_t index, const std::string &what) const {
    throw UnsupportedConstructError(At(index).location, what);
  }

  const Token &Expect(std::string_view text) {
    if (!Check(text)) Fail("expected '" + std::string(text) + "'");
    return toks_[pos_++];
  }
  std::string ExpectIdentifier(const char *what) {
    if (!Cur().IsIdentifier()) Fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  static bool IsOpen(const Token &t) {
    return t.Is("(") || t.Is("[") || t.Is("{");
  }
  static std::string_view CloserOf(const Token &t) {
    if (t.Is("(")) return ")";
    if (t.Is("[")) return "]";
    return "}";
  }

  // Cur() is an opening bracket; moves past its partner. Returns the index
  // of the closing token.
  size_t SkipBalanced() {
    std::vector<std::string_view> stack;
    const size_t open = pos_;
    while (!AtEnd()) {
      const Token &t = Cur();
      if (IsOpen(t)) {
        stack.push_back(CloserOf(t));
      } else if (t.Is(")") || t.Is("]") || t.Is("}")) {
        if (stack.empty() || t.text != stack.back()) {
          throw ParseError(t.location, "mismatched '" + t.text + "'");
        }
        stack.pop_back();
        if (stack.empty()) {
          return pos_++;
        }
      }
      ++pos_;
    }
    throw ParseError(At(open).location, "unbalanced '" + At(open).text + "'");
  }

  // Advances to the first top-level token whose text is in `stops`, which
  // is not consumed. Brackets are skipped as units.
  void SkipUntil(std::initializer_list<std::string_view> stops) {
    while (!AtEnd()) {
      for (std::string_view s : stops) {
        if (Check(s)) return;
      }
      if (IsOpen(Cur())) {
        SkipBalanced();
        continue;
      }
      if (Check(")") || Check("]") || Check("}")) return;
      ++pos_;
    }
  }

  SourceLocation Span(size_t first, size_t last) const {
    SourceLocation loc = At(first).location;
    const SourceLocation &end = At(last).location;
    loc.end_line = end.end_line;
    loc.end_column = end.end_column;
    return loc;
  }

  // Rejects lambda introducers in [begin, end).
  void CheckNoLambda(size_t begin, size_t end) const {
    for (size_t i = begin; i < end && i < toks_.size(); ++i) {
      if (!toks_[i].Is("[")) continue;
      if (i + 1 < end && toks_[i + 1].Is("[")) {  // [[attribute]]
        ++i;
        continue;
      }
      bool subscript = false;
      if (i > 0) {
        const Token &prev = toks_[i - 1];
        if (prev.IsIdentifier() || prev.kind == TokenKind::kLiteral ||
            prev.Is(")") || prev.Is("]") || prev.Is(">") ||
            prev.Is("operator") || prev.Is("this") || prev.Is("delete")) {
          subscript = true;
        } else if (prev.kind == TokenKind::kKeyword) {
          static const std::unordered_set<std::string_view> kExprKeywords = {
              "return", "throw", "co_return", "co_yield", "case", "else",
              "do"};
          subscript = !kExprKeywords.contains(prev.text);
        }
      }
      if (!subscript) Unsupported(i, "lambda expression");
    }
  }

  std::string Text(size_t begin, size_t end) const {
    CheckNoLambda(begin, end);
    if (begin >= end) return "";
    return NormalizeTokens(&toks_[begin], &toks_[begin] + (end - begin));
  }

  std::set<std::string> Identifiers(size_t begin, size_t end) const {
    std::set<std::string> ids;
    for (size_t i = begin; i < end && i < toks_.size(); ++i) {
      if (toks_[i].IsIdentifier()) ids.insert(toks_[i].text);
    }
    return ids;
  }

  // ---- namespace level ----

  std::string CurrentPackage() const {
    std::string package;
    for (const std::string &ns : ns_stack_) {
      if (ns.empty()) continue;
      if (!package.empty()) package += "::";
      package += ns;
    }
    return package;
  }

  ClassDecl &Artificial() {
    const std::string package = CurrentPackage();
    auto it = artificial_.find(package);
    if (it == artificial_.end()) {
      ClassDecl cls;
      cls.simple_name = std::string(kArtificialClassName);
      cls.package = package;
      cls.kind = ClassKind::kArtificial;
      cls.location.file_id = file_id_;
      model_.classes.push_back(std::move(cls));
      it = artificial_.emplace(package, model_.classes.size() - 1).first;
    }
    return model_.classes[it->second];
  }

  void ParseDeclarationSeq(bool braced) {
    while (!AtEnd()) {
      if (Check("}")) {
        if (braced) return;
        Fail("unexpected '}'");
      }
      ParseNamespaceLevelDeclaration();
    }
    if (braced) Fail("expected '}'");
  }

  void ParseNamespaceLevelDeclaration() {
    if (Accept(";")) return;
    if (Check("namespace") ||
        (Check("inline") && Ahead(1).Is("namespace"))) {
      ParseNamespace();
      return;
    }
    if (Check("using") || Check("typedef") || Check("static_assert")) {
      SkipSimpleDeclaration();
      return;
    }
    if (Check("extern") && Ahead(1).kind == TokenKind::kLiteral) {
      pos_ += 2;
      if (Accept("{")) {
        ParseDeclarationSeq(/*braced=*/true);
        Expect("}");
        return;
      }
    }
    if (Check("enum")) {
      SkipEnum();
      return;
    }
    std::vector<std::string> template_params;
    if (Check("template")) template_params = ParseTemplateHeader();
    if (Check("using")) {  // alias template
      SkipSimpleDeclaration();
      return;
    }
    if (Check("union")) Unsupported(pos_, "union");
    if ((Check("class") || Check("struct")) && IsClassDefinitionAhead()) {
      ParseClass(std::move(template_params));
      return;
    }
    if ((Check("class") || Check("struct")) && Ahead(1).IsIdentifier() &&
        Ahead(2).Is(";")) {
      pos_ += 3;  // forward declaration
      return;
    }
    if (Check("extern")) {
      // "extern int x;" only declares an entity defined elsewhere.
      const size_t save = pos_;
      SkipUntil({";", "{"});
      if (Check(";")) {
        ++pos_;
        return;
      }
      pos_ = save;
    }
    MemberResult member = ParseMember(nullptr, Visibility::kPublic);
    AddMember(Artificial(), std::move(member));
  }

  void AddMember(ClassDecl &cls, MemberResult member) {
    for (AttributeDecl &attr : member.attributes) {
      for (const AttributeDecl &existing : cls.attributes) {
        if (existing.name == attr.name) {
          throw ParseError(attr.location,
                           "duplicate member '" + attr.name + "'");
        }
      }
      cls.attributes.push_back(std::move(attr));
    }
    if (member.operation) {
      OperationDecl &op = *member.operation;
      const std::string key = SignatureKey(op);
      for (OperationDecl &existing : cls.operations) {
        if (SignatureKey(existing) != key) continue;
        if (!existing.body && op.body) {
          // A definition following its prototype replaces it.
          existing = std::move(op);
          return;
        }
        if (!op.body) return;  // redeclaration
        throw ParseError(op.location, "redefinition of '" + key + "'");
      }
      cls.operations.push_back(std::move(op));
    }
  }

  void ParseNamespace() {
    Accept("inline");
    Expect("namespace");
    std::vector<std::string> names;
    if (Cur().IsIdentifier()) {
      names.push_back(ExpectIdentifier("namespace name"));
      while (Accept("::")) {
        Accept("inline");
        names.push_back(ExpectIdentifier("namespace name"));
      }
    }
    if (Accept("=")) {  // namespace alias
      SkipUntil({";"});
      Expect(";");
      return;
    }
    Expect("{");
    if (names.empty()) names.push_back("");  // anonymous: same package
    for (const std::string &n : names) ns_stack_.push_back(n);
    ParseDeclarationSeq(/*braced=*/true);
    Expect("}");
    for (size_t i = 0; i < names.size(); ++i) ns_stack_.pop_back();
  }

  void SkipSimpleDeclaration() {
    while (!AtEnd() && !Check(";")) {
      if (IsOpen(Cur())) {
        const bool brace = Check("{");
        const bool after_paren = pos_ > 0 && (At(pos_ - 1).Is(")") ||
                                              At(pos_ - 1).Is("const") ||
                                              At(pos_ - 1).Is("noexcept"));
        SkipBalanced();
        if (brace && after_paren) {  // friend function with a body
          Accept(";");
          return;
        }
        continue;
      }
      ++pos_;
    }
    Expect(";");
  }

  void SkipEnum() {
    Expect("enum");
    SkipUntil({";"});
    Expect(";");
  }

  std::vector<std::string> ParseTemplateHeader() {
    Expect("template");
    Expect("<");
    std::vector<std::string> params;
    std::vector<size_t> segment;
    int angle = 1;
    auto flush = [&] {
      std::optional<std::string> name;
      for (size_t idx : segment) {
        if (At(idx).Is("=")) break;
        if (At(idx).IsIdentifier()) name = At(idx).text;
      }
      if (name) params.push_back(*name);
      segment.clear();
    };
    while (true) {
      if (AtEnd()) Fail("unterminated template parameter list");
      if (IsOpen(Cur())) {
        const size_t begin = pos_;
        SkipBalanced();
        for (size_t i = begin; i < pos_; ++i) segment.push_back(i);
        continue;
      }
      if (Check("<")) ++angle;
      if (Check(">") && --angle == 0) {
        ++pos_;
        break;
      }
      if (Check(",") && angle == 1) {
        flush();
        ++pos_;
        continue;
      }
      segment.push_back(pos_++);
    }
    flush();
    return params;
  }

  bool IsClassDefinitionAhead() const {
    size_t i = pos_ + 1;
    while (At(i).Is("[") && At(i + 1).Is("[")) {
      int depth = 0;
      do {
        if (At(i).Is("[")) ++depth;
        if (At(i).Is("]")) --depth;
        ++i;
      } while (depth > 0 && i < toks_.size());
    }
    if (At(i).IsIdentifier()) ++i;
    while (At(i).Is("::") && At(i + 1).IsIdentifier()) i += 2;
    if (At(i).IsIdentifier() && At(i).text == "final") ++i;
    return At(i).Is("{") || At(i).Is(":");
  }

  void SkipAttributeSpecifiers() {
    while (Check("[") && Ahead(1).Is("[")) SkipBalanced();
    while (Check("alignas")) {
      ++pos_;
      if (Check("(")) SkipBalanced();
    }
  }

  void ParseClass(std::vector<std::string> template_params) {
    const size_t start = pos_;
    ClassDecl cls;
    cls.kind = Check("struct") ? ClassKind::kStruct : ClassKind::kClass;
    ++pos_;
    SkipAttributeSpecifiers();
    cls.simple_name = ExpectIdentifier("class name");
    if (Check("::")) Unsupported(pos_, "nested class");
    if (Check("<")) Unsupported(pos_, "class template specialization");
    if (Cur().IsIdentifier() && Cur().text == "final") ++pos_;
    cls.package = CurrentPackage();
    cls.template_params = std::move(template_params);
    const std::string qualified = cls.QualifiedName();
    if (LookupClass(model_, qualified) != nullptr) {
      throw ParseError(At(start).location,
                       "duplicate definition of class '" + qualified + "'");
    }

    std::vector<std::string> bases;
    if (Accept(":")) {
      while (true) {
        while (Check("virtual") || Check("public") || Check("protected") ||
               Check("private")) {
          ++pos_;
        }
        std::optional<TypeRef> base = TryParseType();
        if (!base) Fail("expected base class name");
        bases.push_back(ToString(*base));
        Accept("...");
        if (!Accept(",")) break;
      }
    }
    Expect("{");

    Visibility vis = cls.kind == ClassKind::kStruct ? Visibility::kPublic
                                                    : Visibility::kPrivate;
    while (!Check("}")) {
      if (AtEnd()) Fail("expected '}' to close class '" + cls.simple_name + "'");
      if ((Check("public") || Check("protected") || Check("private")) &&
          Ahead(1).Is(":")) {
        vis = *VisibilityFromString(Cur().text);
        pos_ += 2;
        continue;
      }
      if (Accept(";")) continue;
      if (Check("using") || Check("typedef") || Check("static_assert") ||
          Check("friend")) {
        SkipSimpleDeclaration();
        continue;
      }
      if (Check("enum")) {
        SkipEnum();
        continue;
      }
      if (Check("template")) {
        ParseTemplateHeader();
        if (Check("using")) {
          SkipSimpleDeclaration();
          continue;
        }
      }
      if (Check("class") || Check("struct") || Check("union")) {
        if (Ahead(1).IsIdentifier() && Ahead(2).Is(";")) {
          pos_ += 3;  // forward declaration of a nested type
          continue;
        }
        if (IsClassDefinitionAhead() || Ahead(1).Is("{")) {
          Unsupported(pos_, "nested class");
        }
      }
      MemberResult member = ParseMember(&cls.simple_name, vis);
      AddMember(cls, std::move(member));
    }
    size_t last = pos_;
    Expect("}");
    if (Check(";")) {
      last = pos_;
      ++pos_;
    } else {
      Unsupported(pos_, "declarator after class definition");
    }
    cls.location = Span(start, last);
    for (const std::string &base : bases) {
      model_.generalizations.push_back(Generalization{qualified, base});
    }
    model_.classes.push_back(std::move(cls));
  }

  // ---- declarations ----

  DeclSpecs ParseDeclSpecs() {
    DeclSpecs specs;
    while (true) {
      SkipAttributeSpecifiers();
      const Token &t = Cur();
      if (t.kind != TokenKind::kKeyword) break;
      if (auto m = ModifierFromString(t.text)) {
        if (*m == Modifier::kConst) {
          specs.leading_const = true;
        } else {
          specs.modifiers.Insert(*m);
        }
        ++pos_;
        continue;
      }
      if (t.Is("volatile") || t.Is("extern") || t.Is("thread_local") ||
          t.Is("consteval") || t.Is("constinit") || t.Is("register")) {
        ++pos_;
        continue;
      }
      break;
    }
    return specs;
  }

  std::string ParseOperatorName() {
    Expect("operator");
    if (Check("(") && Ahead(1).Is(")")) {
      pos_ += 2;
      return "operator()";
    }
    if (Check("[") && Ahead(1).Is("]")) {
      pos_ += 2;
      return "operator[]";
    }
    if (Check("new") || Check("delete")) {
      std::string name = "operator " + toks_[pos_++].text;
      if (Check("[") && Ahead(1).Is("]")) {
        pos_ += 2;
        name += "[]";
      }
      return name;
    }
    if (Cur().kind == TokenKind::kLiteral) {
      Unsupported(pos_, "user-defined literal operator");
    }
    if (Cur().kind == TokenKind::kPunctuator && !Check("(")) {
      std::string name = "operator" + toks_[pos_++].text;
      // ">>" and ">>=" arrive as two tokens.
      if (name == "operator>" && (Check(">") || Check(">=")) &&
          Adjacent(At(pos_ - 1), Cur())) {
        name += toks_[pos_++].text;
      }
      return name;
    }
    std::optional<TypeRef> conv = TryParseType();
    if (!conv) Fail("expected operator");
    return "operator " + ToString(*conv);
  }

  std::vector<Parameter> ParseParameters() {
    Expect("(");
    std::vector<Parameter> params;
    if (Accept(")")) return params;
    if (Check("void") && Ahead(1).Is(")")) {
      pos_ += 2;
      return params;
    }
    while (true) {
      if (Accept("...")) {
        Expect(")");
        break;
      }
      const size_t start = pos_;
      DeclSpecs specs = ParseDeclSpecs();
      std::optional<TypeRef> type = TryParseType();
      if (!type) Fail("expected parameter type");
      if (specs.leading_const) type->is_const = true;
      Accept("...");
      Parameter p;
      if (Check("(")) Unsupported(pos_, "function pointer parameter");
      if (Cur().IsIdentifier()) p.name = toks_[pos_++].text;
      while (Check("[")) {
        SkipBalanced();
        ++type->pointer_depth;
      }
      p.type = std::move(*type);
      p.position = static_cast<int>(params.size());
      size_t last = pos_ - 1;
      if (Accept("=")) {
        const size_t begin = pos_;
        SkipUntil({",", ")"});
        if (begin == pos_) Fail("expected default argument");
        p.default_value = Text(begin, pos_);
        last = pos_ - 1;
      }
      p.location = Span(start, last);
      params.push_back(std::move(p));
      if (Accept(",")) continue;
      Expect(")");
      break;
    }
    return params;
  }

  // Parses a class member or namespace-level entity. `class_name` is the
  // enclosing class, or null at namespace level.
  MemberResult ParseMember(const std::string *class_name, Visibility vis) {
    const size_t start = pos_;
    DeclSpecs specs = ParseDeclSpecs();
    MemberResult result;

    OperationDecl op;
    op.visibility = vis;
    op.modifiers = specs.modifiers;
    bool have_name = false;
    TypeRef type;

    if (class_name != nullptr && Cur().IsIdentifier() &&
        Cur().text == *class_name && Ahead(1).Is("(")) {
      op.name = toks_[pos_++].text;
      op.is_constructor = true;
      have_name = true;
    } else if (Check("~")) {
      ++pos_;
      op.name = "~" + ExpectIdentifier("destructor name");
      have_name = true;
    } else if (Check("operator")) {
      op.name = ParseOperatorName();
      have_name = true;
    }

    if (!have_name) {
      std::optional<TypeRef> parsed = TryParseType();
      if (!parsed) Fail("expected declaration");
      type = std::move(*parsed);
      if (specs.leading_const) type.is_const = true;
      if (Check("operator")) {
        op.name = ParseOperatorName();
      } else if (Cur().IsIdentifier()) {
        op.name = toks_[pos_++].text;
        if (Check("::") || Check("<")) {
          Unsupported(pos_ - 1, "out-of-class member definition");
        }
      } else if (Check("(") && type.base_name.find("::") != std::string::npos) {
        Unsupported(start, "out-of-class member definition");
      } else if (Check("(")) {
        Unsupported(pos_, "function pointer declarator");
      } else {
        Fail("expected declarator name");
      }
      // "T x(1, 2);" declares a variable, not a function.
      const bool direct_init =
          Check("(") && Ahead(1).kind == TokenKind::kLiteral;
      if (!Check("(") || direct_init) {
        ParseVariableDeclarators(start, std::move(type), specs, op.name, vis,
                                 result.attributes);
        return result;
      }
      op.return_type = std::move(type);
    }

    op.parameters = ParseParameters();
    // Trailing qualifiers.
    while (true) {
      if (Accept("const")) {
        op.modifiers.Insert(Modifier::kConst);
      } else if (Accept("volatile") || Accept("&") || Accept("&&")) {
      } else if (Check("noexcept") || Check("throw")) {
        ++pos_;
        if (Check("(")) SkipBalanced();
      } else if (Cur().IsIdentifier() &&
                 (Cur().text == "override" || Cur().text == "final")) {
        ++pos_;
      } else if (Accept("->")) {
        std::optional<TypeRef> trailing = TryParseType();
        if (!trailing) Fail("expected trailing return type");
        op.return_type = std::move(*trailing);
      } else {
        break;
      }
    }
    size_t last = pos_;
    if (Accept("=")) {
      if (!(Check("default") || Check("delete") ||
            (Cur().kind == TokenKind::kLiteral && Cur().text == "0"))) {
        Fail("expected '0', 'default' or 'delete'");
      }
      ++pos_;
      last = pos_;
      Expect(";");
    } else if (Accept(":")) {
      const size_t init_begin = pos_;
      while (true) {
        while (!AtEnd() && !Check("(") && !Check("{")) ++pos_;
        if (AtEnd()) Fail("expected member initializer");
        SkipBalanced();
        if (!Accept(",")) break;
      }
      CheckNoLambda(init_begin, pos_);
      op.body = ParseBlock();
      last = pos_ - 1;
    } else if (Check("{")) {
      op.body = ParseBlock();
      last = pos_ - 1;
    } else {
      Expect(";");
    }
    op.location = Span(start, last);
    result.operation = std::move(op);
    return result;
  }

  void ParseVariableDeclarators(size_t start, TypeRef type,
                                const DeclSpecs &specs, std::string name,
                                Visibility vis,
                                std::vector<AttributeDecl> &out) {
    ModifierSet modifiers = specs.modifiers;
    // Top-level constness of a data member is a member modifier.
    if (type.is_const && type.pointer_depth == 0 && !type.is_reference) {
      type.is_const = false;
      modifiers.Insert(Modifier::kConst);
    }
    TypeRef declarator_type = type;
    while (true) {
      AttributeDecl attr;
      attr.name = std::move(name);
      attr.modifiers = modifiers;
      attr.visibility = vis;
      while (Check("[")) {
        const size_t b = pos_;
        SkipBalanced();
        declarator_type.base_name += Text(b, pos_);
      }
      if (Accept("=")) {
        const size_t begin = pos_;
        SkipUntil({",", ";"});
        if (begin == pos_) Fail("expected initializer");
        attr.initializer = Text(begin, pos_);
      } else if (Check("{") || Check("(")) {
        const size_t begin = pos_;
        SkipBalanced();
        attr.initializer = Text(begin, pos_);
      } else if (Check(":")) {
        Unsupported(pos_, "bit-field");
      }
      attr.type = std::move(declarator_type);
      const size_t end = pos_;
      SkipUntil({",", ";"});
      if (pos_ != end) Fail("unexpected token in declaration");
      out.push_back(std::move(attr));
      if (Accept(",")) {
        declarator_type = type;
        while (Check("*") || Check("&") || Check("&&")) {
          if (Check("*")) ++declarator_type.pointer_depth;
          else declarator_type.is_reference = true;
          ++pos_;
        }
        name = ExpectIdentifier("declarator name");
        continue;
      }
      Expect(";");
      for (AttributeDecl &a : out) a.location = Span(start, pos_ - 1);
      return;
    }
  }

  // ---- types ----

  std::optional<std::vector<TypeRef>> TryParseTemplateArgs() {
    const size_t save = pos_;
    if (!Accept("<")) return std::nullopt;
    std::vector<TypeRef> args;
    if (Accept(">")) return args;
    while (true) {
      const size_t arg_start = pos_;
      std::optional<TypeRef> type = TryParseType();
      if (!type || !(Check(",") || Check(">"))) {
        // Non-type argument: take tokens up to a top-level ',' or '>'.
        pos_ = arg_start;
        while (!AtEnd() && !Check(",") && !Check(">")) {
          if (Check(";") || Check("{") || Check("}") || Check("=") ||
              Check("&&") || Check("||")) {
            pos_ = save;
            return std::nullopt;
          }
          if (Check("(") || Check("[")) {
            SkipBalanced();
            continue;
          }
          if (Check(")") || Check("]")) {
            pos_ = save;
            return std::nullopt;
          }
          ++pos_;
        }
        if (AtEnd() || pos_ == arg_start) {
          pos_ = save;
          return std::nullopt;
        }
        TypeRef value;
        value.base_name = NormalizeTokens(&toks_[arg_start],
                                          &toks_[arg_start] + (pos_ - arg_start));
        type = std::move(value);
      }
      args.push_back(std::move(*type));
      if (Accept(",")) continue;
      Expect(">");
      return args;
    }
  }

  std::optional<TypeRef> TryParseType() {
    const size_t save = pos_;
    TypeRef type;
    while (Check("const") || Check("volatile") || Check("typename") ||
           Check("class") || Check("struct") || Check("enum")) {
      if (Check("const")) type.is_const = true;
      ++pos_;
    }
    if (Cur().kind == TokenKind::kKeyword && IsFundamentalKeyword(Cur().text)) {
      std::string name;
      while (Cur().kind == TokenKind::kKeyword &&
             (IsFundamentalKeyword(Cur().text) || Check("const"))) {
        if (Check("const")) {
          type.is_const = true;
          ++pos_;
          continue;
        }
        if (!name.empty()) name += ' ';
        name += toks_[pos_++].text;
      }
      type.base_name = std::move(name);
    } else if (Check("decltype")) {
      const size_t begin = pos_++;
      if (!Check("(")) {
        pos_ = save;
        return std::nullopt;
      }
      SkipBalanced();
      type.base_name = Text(begin, pos_);
    } else if (Cur().IsIdentifier() || (Check("::") && Ahead(1).IsIdentifier())) {
      std::string name;
      if (Accept("::")) name = "::";
      while (true) {
        name += toks_[pos_++].text;
        std::optional<std::vector<TypeRef>> args;
        if (Check("<")) args = TryParseTemplateArgs();
        if (Check("::") && (Ahead(1).IsIdentifier() || Ahead(1).Is("template"))) {
          if (args) {
            name += '<';
            for (size_t i = 0; i < args->size(); ++i) {
              if (i > 0) name += ',';
              name += ToString((*args)[i]);
            }
            name += '>';
          }
          ++pos_;
          Accept("template");
          name += "::";
          continue;
        }
        if (args) type.template_args = std::move(*args);
        break;
      }
      type.base_name = std::move(name);
    } else {
      pos_ = save;
      return std::nullopt;
    }
    while (true) {
      if (Accept("const")) {
        type.is_const = true;
      } else if (Accept("volatile")) {
      } else if (Accept("*")) {
        ++type.pointer_depth;
      } else if (Accept("&") || Accept("&&")) {
        type.is_reference = true;
      } else {
        break;
      }
    }
    return type;
  }

  // ---- statements ----

  bool IsDeclarationStart() {
    const Token &t = Cur();
    if (t.Is("static") || t.Is("const") || t.Is("constexpr") ||
        t.Is("volatile") || t.Is("thread_local") || t.Is("register")) {
      return true;
    }
    if (t.kind == TokenKind::kKeyword && IsFundamentalKeyword(t.text)) {
      // "int(x)" style functional casts are expressions.
      return !Ahead(1).Is("(");
    }
    if (t.Is("decltype") || t.Is("typename")) return true;
    if (!(t.IsIdentifier() || t.Is("::"))) return false;
    const size_t save = pos_;
    bool decl = false;
    if (TryParseType() && Cur().IsIdentifier()) {
      const Token &next = Ahead(1);
      decl = next.Is("=") || next.Is(";") || next.Is("(") || next.Is("{") ||
             next.Is(",") || next.Is("[") || next.Is(":");
    }
    pos_ = save;
    return decl;
  }

  // Declaration without its terminator. Stops before a top-level ';' or,
  // inside a for header, ':' / ')'.
  std::vector<VariableDecl> ParseLocalDeclarators(bool in_for_header = false) {
    DeclSpecs specs = ParseDeclSpecs();
    std::optional<TypeRef> type = TryParseType();
    if (!type) Fail("expected type");
    if (specs.leading_const) type->is_const = true;
    std::vector<VariableDecl> vars;
    TypeRef declarator_type = *type;
    while (true) {
      if (Check("[")) {  // structured binding
        Unsupported(pos_, "structured binding");
      }
      VariableDecl v;
      v.name = ExpectIdentifier("variable name");
      while (Check("[")) {
        const size_t b = pos_;
        SkipBalanced();
        declarator_type.base_name += Text(b, pos_);
      }
      v.type = declarator_type;
      vars.push_back(std::move(v));
      if (Accept("=")) {
        if (in_for_header) {
          SkipUntil({",", ";", ":"});
        } else {
          SkipUntil({",", ";"});
        }
      } else if (Check("(") || Check("{")) {
        SkipBalanced();
      }
      if (!Accept(",")) break;
      declarator_type = *type;
      while (Check("*") || Check("&") || Check("&&")) {
        if (Check("*")) ++declarator_type.pointer_depth;
        else declarator_type.is_reference = true;
        ++pos_;
      }
    }
    return vars;
  }

  Statement Leaf(StatementKind kind, size_t start, size_t text_begin,
                 size_t text_end, size_t last) {
    Statement s;
    s.kind = kind;
    s.text = Text(text_begin, text_end);
    s.referenced_identifiers = Identifiers(text_begin, text_end);
    s.location = Span(start, last);
    return s;
  }

  // Parses "( ... )" and returns the [begin, end) range of its contents.
  std::pair<size_t, size_t> ParseParenthesized() {
    if (!Check("(")) Fail("expected '('");
    const size_t open = pos_;
    const size_t close = SkipBalanced();
    return {open + 1, close};
  }

  Statement ParseBlock() {
    const size_t start = pos_;
    Expect("{");
    Statement block;
    block.kind = StatementKind::kBlock;
    while (!Check("}")) {
      if (AtEnd()) Fail("expected '}'");
      if (auto s = ParseStatement()) block.children.push_back(std::move(*s));
    }
    block.location = Span(start, pos_);
    ++pos_;
    return block;
  }

  std::optional<Statement> ParseSubStatement() {
    if (AtEnd()) Fail("expected statement");
    return ParseStatement();
  }

  std::optional<Statement> ParseStatement() {
    const size_t start = pos_;
    if (Accept(";")) return std::nullopt;
    if (Check("{")) return ParseBlock();

    if (Check("if")) {
      ++pos_;
      Accept("constexpr");
      Statement s;
      s.kind = StatementKind::kIf;
      auto [b, e] = ParseParenthesized();
      s.text = Text(b, e);
      s.referenced_identifiers = Identifiers(b, e);
      if (auto then = ParseSubStatement()) s.children.push_back(std::move(*then));
      if (Accept("else")) {
        if (auto other = ParseSubStatement()) {
          s.children.push_back(std::move(*other));
        }
      }
      s.location = Span(start, pos_ - 1);
      return s;
    }
    if (Check("for")) {
      ++pos_;
      Statement s;
      s.kind = StatementKind::kFor;
      auto [b, e] = ParseParenthesized();
      s.text = Text(b, e);
      s.referenced_identifiers = Identifiers(b, e);
      {
        const size_t after = pos_;
        pos_ = b;
        if (IsDeclarationStart()) {
          s.declared_variables = ParseLocalDeclarators(/*in_for_header=*/true);
        }
        pos_ = after;
      }
      if (auto body = ParseSubStatement()) s.children.push_back(std::move(*body));
      s.location = Span(start, pos_ - 1);
      return s;
    }
    if (Check("while")) {
      ++pos_;
      Statement s;
      s.kind = StatementKind::kWhile;
      auto [b, e] = ParseParenthesized();
      s.text = Text(b, e);
      s.referenced_identifiers = Identifiers(b, e);
      if (auto body = ParseSubStatement()) s.children.push_back(std::move(*body));
      s.location = Span(start, pos_ - 1);
      return s;
    }
    if (Check("do")) {
      ++pos_;
      Statement s;
      s.kind = StatementKind::kDo;
      if (auto body = ParseSubStatement()) s.children.push_back(std::move(*body));
      Expect("while");
      auto [b, e] = ParseParenthesized();
      s.text = Text(b, e);
      s.referenced_identifiers = Identifiers(b, e);
      Expect(";");
      s.location = Span(start, pos_ - 1);
      return s;
    }
    if (Check("switch")) {
      ++pos_;
      Statement s;
      s.kind = StatementKind::kSwitch;
      auto [b, e] = ParseParenthesized();
      s.text = Text(b, e);
      s.referenced_identifiers = Identifiers(b, e);
      if (auto body = ParseSubStatement()) s.children.push_back(std::move(*body));
      s.location = Span(start, pos_ - 1);
      return s;
    }
    if (Check("case") || (Check("default") && Ahead(1).Is(":"))) {
      // Case labels are kept as leaves so label edits stay visible.
      ++pos_;
      while (!Check(":")) {
        if (AtEnd() || Check(";")) Fail("expected ':' after case label");
        if (IsOpen(Cur())) {
          SkipBalanced();
          continue;
        }
        ++pos_;
      }
      const size_t colon = pos_++;
      return Leaf(StatementKind::kExpression, start, start, colon + 1, colon);
    }
    if (Check("try")) {
      ++pos_;
      Statement s;
      s.kind = StatementKind::kTry;
      s.children.push_back(ParseBlock());
      while (Check("catch")) {
        const size_t catch_start = pos_++;
        auto [b, e] = ParseParenthesized();
        std::vector<VariableDecl> vars;
        {
          const size_t after = pos_;
          pos_ = b;
          if (!Check("...")) vars = ParseCatchParameter();
          pos_ = after;
        }
        Statement handler = ParseBlock();
        handler.text = "catch(" + Text(b, e) + ")";
        handler.referenced_identifiers = Identifiers(b, e);
        handler.declared_variables = std::move(vars);
        handler.location.start_line = At(catch_start).location.start_line;
        handler.location.start_column = At(catch_start).location.start_column;
        s.children.push_back(std::move(handler));
      }
      if (s.children.size() == 1) Fail("expected 'catch'");
      s.location = Span(start, pos_ - 1);
      return s;
    }
    if (Check("return") || Check("co_return")) {
      ++pos_;
      SkipUntil({";"});
      const size_t e = pos_;
      Expect(";");
      return Leaf(StatementKind::kReturn, start, start, e, e);
    }
    if (Check("break") || Check("continue")) {
      const StatementKind kind =
          Check("break") ? StatementKind::kBreak : StatementKind::kContinue;
      ++pos_;
      const size_t e = pos_;
      Expect(";");
      return Leaf(kind, start, start, e, e);
    }
    if (Check("class") || Check("struct") || Check("union") || Check("enum")) {
      size_t i = pos_ + 1;
      if (At(i).Is("class") || At(i).Is("struct")) ++i;  // enum class
      if (At(i).IsIdentifier()) ++i;
      if (At(i).Is("{") || At(i).Is(":")) {
        Unsupported(pos_, Check("enum") ? "local enum" : "local class");
      }
    }
    if (Check("using") || Check("typedef") || Check("static_assert")) {
      SkipSimpleDeclaration();
      return std::nullopt;
    }
    if (Check("goto")) Unsupported(pos_, "goto");
    if (Cur().IsIdentifier() && Ahead(1).Is(":") && !Ahead(1).Is("::")) {
      Unsupported(pos_, "label");
    }

    if (IsDeclarationStart()) {
      std::vector<VariableDecl> vars = ParseLocalDeclarators();
      const size_t e = pos_;
      if (!Check(";")) Fail("expected ';' after declaration");
      ++pos_;
      Statement s = Leaf(StatementKind::kDeclaration, start, start, e, e);
      s.declared_variables = std::move(vars);
      return s;
    }
    SkipUntil({";"});
    const size_t e = pos_;
    if (e == start) Fail("expected statement");
    Expect(";");
    return Leaf(StatementKind::kExpression, start, start, e, e);
  }

  std::vector<VariableDecl> ParseCatchParameter() {
    DeclSpecs specs = ParseDeclSpecs();
    std::optional<TypeRef> type = TryParseType();
    if (!type) Fail("expected exception type");
    if (specs.leading_const) type->is_const = true;
    if (!Cur().IsIdentifier()) return {};
    return {VariableDecl{Cur().text, std::move(*type)}};
  }

  std::vector<Token> toks_;
  Token eof_;
  size_t pos_ = 0;
  std::string file_id_;
  CodeModel model_;
  std::vector<std::string> ns_stack_;
  std::map<std::string, size_t> artificial_;
};

}  // namespace

std::string NormalizeTokens(const Token *begin, const Token *end) {
  std::string out;
  const Token *prev = nullptr;
  for (const Token *t = begin; t != end; ++t) {
    if (prev != nullptr) {
      bool space = !(Glues(*prev) || Glues(*t) || t->Is(";"));
      if (prev->Is(">") && (t->Is(">") || t->Is(">=")) && Adjacent(*prev, *t)) {
        space = false;
      }
      if (space) out += ' ';
    }
    out += t->text;
    prev = t;
  }
  return out;
}

CodeModel Parse(std::string_view source, const std::string &file_id) {
  std::vector<Token> tokens = StripPreprocessor(Tokenize(source, file_id));
  return Parser(std::move(tokens), file_id).Run();
}

CodeModel ParseFile(const std::filesystem::path &path,
                    const std::string &file_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot read '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str(), file_id.empty() ? path.string() : file_id);
}

}  // namespace refminer
