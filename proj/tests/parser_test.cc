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

#include <gtest/gtest.h>

#include "test_util.h"

namespace refminer {
namespace {

using testing::DataPath;

const OperationDecl *FindOp(const ClassDecl &cls, const std::string &name) {
  for (const OperationDecl &op : cls.operations) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

TEST(ParseTest, FirstListing) {
  const CodeModel m = ParseFile(DataPath("listing1.cpp"), "listing1.cpp");
  ASSERT_EQ(m.classes.size(), 1u);
  const ClassDecl &c = m.classes[0];
  EXPECT_EQ(c.simple_name, "Circle");
  EXPECT_EQ(c.package, "");
  EXPECT_EQ(c.kind, ClassKind::kClass);
  ASSERT_EQ(c.attributes.size(), 1u);
  EXPECT_EQ(c.attributes[0].name, "PI");
  EXPECT_EQ(c.attributes[0].visibility, Visibility::kPrivate);
  EXPECT_EQ(c.attributes[0].initializer, "3.14159");
  EXPECT_EQ(ToString(c.attributes[0].type), "double");
  ASSERT_EQ(c.operations.size(), 2u);
  const OperationDecl &area = c.operations[0];
  EXPECT_EQ(area.name, "getArea");
  EXPECT_EQ(area.visibility, Visibility::kPublic);
  ASSERT_EQ(area.parameters.size(), 1u);
  EXPECT_EQ(area.parameters[0].name, "r");
  ASSERT_TRUE(area.body.has_value());
  EXPECT_EQ(area.body->kind, StatementKind::kBlock);
  ASSERT_EQ(area.body->children.size(), 1u);
  EXPECT_EQ(area.body->children[0].kind, StatementKind::kReturn);
  EXPECT_EQ(area.body->children[0].text, "return PI * r * r");
  EXPECT_EQ(area.location.start_line, 4);
  EXPECT_EQ(area.location.end_line, 6);

  const OperationDecl &circ = c.operations[1];
  EXPECT_EQ(circ.name, "calcCircumference");
  ASSERT_EQ(circ.body->children.size(), 2u);
  const Statement &decl = circ.body->children[0];
  EXPECT_EQ(decl.kind, StatementKind::kDeclaration);
  EXPECT_EQ(decl.text, "double diameter = radius * radius");
  ASSERT_EQ(decl.declared_variables.size(), 1u);
  EXPECT_EQ(decl.declared_variables[0].name, "diameter");
  EXPECT_TRUE(decl.referenced_identifiers.contains("radius"));
  EXPECT_EQ(decl.location.start_line, 8);
}

TEST(ParseTest, SecondListing) {
  const CodeModel m = ParseFile(DataPath("listing2.cpp"));
  ASSERT_EQ(m.classes.size(), 1u);
  const ClassDecl &c = m.classes[0];
  EXPECT_EQ(c.simple_name, "CircleCalculator");
  ASSERT_EQ(c.attributes.size(), 1u);
  const ModifierSet expected_attr{Modifier::kInline, Modifier::kStatic,
                                  Modifier::kConst};
  EXPECT_EQ(c.attributes[0].modifiers, expected_attr);
  EXPECT_FALSE(c.attributes[0].type.is_const);
  ASSERT_EQ(c.operations.size(), 3u);
  for (const OperationDecl &op : c.operations) {
    EXPECT_EQ(op.modifiers, ModifierSet{Modifier::kStatic}) << op.name;
  }
  const OperationDecl *sector = FindOp(c, "calcSectorArea");
  ASSERT_NE(sector, nullptr);
  ASSERT_EQ(sector->parameters.size(), 2u);
  EXPECT_EQ(sector->parameters[1].name, "angle");
  EXPECT_EQ(sector->parameters[1].position, 1);
  EXPECT_EQ(sector->parameters[1].location.start_line, 8);
  EXPECT_EQ(sector->location.start_line, 7);
  EXPECT_EQ(sector->location.end_line, 10);
  EXPECT_EQ(sector->body->location.start_line, 8);
  EXPECT_EQ(sector->body->children[0].text, "return angle / 360 * calcArea(radius)");
}

TEST(ParseTest, StructWithMultipleBases) {
  const CodeModel m = Parse("struct P : A, B {};", "p.cpp");
  ASSERT_EQ(m.classes.size(), 1u);
  EXPECT_EQ(m.classes[0].simple_name, "P");
  EXPECT_EQ(m.classes[0].kind, ClassKind::kStruct);
  const std::vector<Generalization> expected = {{"P", "A"}, {"P", "B"}};
  EXPECT_EQ(m.generalizations, expected);
}

TEST(ParseTest, StructMembersDefaultPublic) {
  const CodeModel m = Parse("struct S { int a; private: int b; };", "s.cpp");
  ASSERT_EQ(m.classes[0].attributes.size(), 2u);
  EXPECT_EQ(m.classes[0].attributes[0].visibility, Visibility::kPublic);
  EXPECT_EQ(m.classes[0].attributes[1].visibility, Visibility::kPrivate);
}

TEST(ParseTest, LambdaIsUnsupported) {
  try {
    Parse("class A {\n  int f() {\n    auto g = [](int y) { return y; };\n"
          "    return g(1);\n  }\n};\n",
          "lambda.cpp");
    FAIL() << "expected UnsupportedConstructError";
  } catch (const UnsupportedConstructError &e) {
    EXPECT_EQ(e.construct(), "lambda expression");
    EXPECT_EQ(e.location().start_line, 3);
    EXPECT_NE(std::string(e.what()).find("lambda"), std::string::npos);
  }
}

TEST(ParseTest, NestedClassIsUnsupported) {
  try {
    Parse("class A {\n  class B {};\n};", "n.cpp");
    FAIL() << "expected UnsupportedConstructError";
  } catch (const UnsupportedConstructError &e) {
    EXPECT_EQ(e.construct(), "nested class");
    EXPECT_EQ(e.location().start_line, 2);
  }
}

TEST(ParseTest, LocalClassIsUnsupported) {
  EXPECT_THROW(Parse("void f() {\n  struct L { int x; };\n}\n", "l.cpp"),
               UnsupportedConstructError);
}

TEST(ParseTest, MalformedSyntaxIsParseError) {
  try {
    Parse("class A {\n  int f( {\n};", "bad.cpp");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_GT(e.location().start_line, 0);
  }
}

TEST(ParseTest, NamespacesAndGlobals) {
  const CodeModel m = Parse(
      "namespace math {\nint add(int a, int b) { return a + b; }\n"
      "int counter = 0;\nnamespace detail {\nclass Helper {};\n}\n}\n",
      "m.cpp");
  const ClassDecl *globals = LookupClass(m, "math::<globals>");
  ASSERT_NE(globals, nullptr);
  EXPECT_EQ(globals->kind, ClassKind::kArtificial);
  ASSERT_EQ(globals->operations.size(), 1u);
  EXPECT_EQ(globals->operations[0].name, "add");
  ASSERT_EQ(globals->attributes.size(), 1u);
  EXPECT_EQ(globals->attributes[0].name, "counter");
  EXPECT_NE(LookupClass(m, "math::detail::Helper"), nullptr);
  EXPECT_EQ(LookupClass(m, "<globals>"), nullptr);
}

TEST(ParseTest, TemplateParameters) {
  const CodeModel m = Parse(
      "template <typename T, int N>\nclass Box {\n T items[N];\n};", "t.cpp");
  const std::vector<std::string> expected = {"T", "N"};
  EXPECT_EQ(m.classes[0].template_params, expected);
}

TEST(ParseTest, CompositeStatements) {
  const CodeModel m = Parse(R"(class K {
 public:
  int run(int n) {
    int total = 0;
    for (int i = 0; i < n; ++i) {
      if (i % 2 == 0) {
        total += i;
      } else {
        continue;
      }
    }
    while (total > 100) total -= 10;
    switch (n) {
      case 1:
        break;
      default:
        total = 0;
    }
    try {
      total = total / n;
    } catch (const std::exception& e) {
      total = -1;
    }
    return total > 0 ? total : 0;
  }
};
)",
                            "k.cpp");
  const OperationDecl &op = m.classes[0].operations[0];
  const auto &stmts = op.body->children;
  ASSERT_EQ(stmts.size(), 6u);
  EXPECT_EQ(stmts[1].kind, StatementKind::kFor);
  EXPECT_EQ(stmts[1].text, "int i = 0; i < n; ++ i");
  ASSERT_EQ(stmts[1].declared_variables.size(), 1u);
  EXPECT_EQ(stmts[1].declared_variables[0].name, "i");
  EXPECT_EQ(stmts[2].kind, StatementKind::kWhile);
  EXPECT_EQ(stmts[3].kind, StatementKind::kSwitch);
  EXPECT_EQ(stmts[4].kind, StatementKind::kTry);
  EXPECT_EQ(stmts[5].kind, StatementKind::kReturn);
  EXPECT_EQ(stmts[5].text, "return total > 0 ? total : 0");
}

TEST(ParseTest, DirectInitializedVariable) {
  const CodeModel m = Parse("static Option<bool> verbose(\"v\", false);\n", "o");
  ASSERT_EQ(m.classes.size(), 1u);
  ASSERT_EQ(m.classes[0].attributes.size(), 1u);
  const AttributeDecl &a = m.classes[0].attributes[0];
  EXPECT_EQ(a.name, "verbose");
  EXPECT_EQ(a.initializer, "(\"v\",false)");
  EXPECT_TRUE(a.modifiers.Contains(Modifier::kStatic));
  EXPECT_TRUE(m.classes[0].operations.empty());
}

TEST(ParseTest, AliasTemplatesAreSkipped) {
  const CodeModel m = Parse(
      "template <typename T>\nusing Vec = std::vector<T>;\n"
      "class H {\n  template <typename U>\n  using Ptr = U*;\n  int n;\n};\n",
      "a");
  ASSERT_EQ(m.classes.size(), 1u);
  EXPECT_EQ(m.classes[0].attributes.size(), 1u);
}

TEST(NormalizeTokensTest, SpacingRules) {
  const auto tokens = Tokenize("std::max( a , b ) -> c [ 0 ] . d ;", "f");
  EXPECT_EQ(NormalizeTokens(tokens.data(), tokens.data() + tokens.size()),
            "std::max(a,b)->c[0].d;");
}

TEST(ParseFileTest, MissingFileIsInputError) {
  EXPECT_THROW(ParseFile("/nonexistent/file.cpp"), InputError);
}

}  // namespace
}  // namespace refminer
