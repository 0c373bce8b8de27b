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

#include <gtest/gtest.h>

#include "refminer/parser.h"
#include "test_util.h"

namespace refminer {
namespace {

TEST(LookupClassTest, FirstListing) {
  const CodeModel m = ParseFile(testing::DataPath("listing1.cpp"));
  const ClassDecl *c = LookupClass(m, "Circle");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->simple_name, "Circle");
  EXPECT_EQ(c->attributes.size(), 1u);
  EXPECT_EQ(c->operations.size(), 2u);
}

TEST(LookupClassTest, EmptyModel) {
  EXPECT_EQ(LookupClass(CodeModel{}, "X"), nullptr);
}

TEST(LookupClassTest, ArtificialClassOfNamespace) {
  const CodeModel m =
      Parse("namespace math {\nint add(int a, int b) { return a + b; }\n}\n", "m");
  const ClassDecl *c = LookupClass(m, "math::<globals>");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->kind, ClassKind::kArtificial);
  ASSERT_EQ(c->operations.size(), 1u);
  EXPECT_EQ(c->operations[0].name, "add");
}

TEST(TypeRefTest, Spelling) {
  TypeRef inner{"int", {}, false, 0, false};
  TypeRef t{"std::vector", {inner}, true, 0, true};
  EXPECT_EQ(ToString(t), "const std::vector<int>&");
  TypeRef p{"char", {}, true, 2, false};
  EXPECT_EQ(ToString(p), "const char**");
}

TEST(ModifierSetTest, EnumerationOrderAndEquality) {
  ModifierSet s{Modifier::kInline, Modifier::kStatic};
  s.Insert(Modifier::kConst);
  s.Insert(Modifier::kConst);
  const std::vector<Modifier> expected = {Modifier::kStatic, Modifier::kConst,
                                          Modifier::kInline};
  EXPECT_EQ(s.ToVector(), expected);
  s.Erase(Modifier::kInline);
  EXPECT_EQ(s, (ModifierSet{Modifier::kConst, Modifier::kStatic}));
  EXPECT_FALSE(s.Empty());
  EXPECT_EQ(ModifierFromString("constexpr"), Modifier::kConstexpr);
  EXPECT_FALSE(ModifierFromString("override").has_value());
}

TEST(SignatureKeyTest, OperationAndAttribute) {
  const CodeModel m = ParseFile(testing::DataPath("listing2.cpp"));
  const ClassDecl &c = m.classes[0];
  EXPECT_EQ(SignatureKey(c.operations[1]), "calcSectorArea(double,double)");
  EXPECT_EQ(SignatureKey(c.attributes[0]), "PI:double");
}

TEST(InheritsFromTest, FollowsChainsAndNamespaces) {
  const CodeModel m = Parse(
      "namespace a {\nclass Base {};\nclass Mid : public Base {};\n}\n"
      "class Leaf : public a::Mid {};\nclass Other {};\n",
      "i");
  EXPECT_TRUE(InheritsFrom(m, "a::Mid", "a::Base"));
  EXPECT_TRUE(InheritsFrom(m, "Leaf", "a::Base"));
  EXPECT_FALSE(InheritsFrom(m, "a::Base", "Leaf"));
  EXPECT_FALSE(InheritsFrom(m, "Other", "a::Base"));
}

TEST(CollectLeavesTest, PreOrder) {
  const CodeModel m = Parse(
      "void f(int x) {\n  int a = 1;\n  if (x) {\n    a = 2;\n  }\n  return;\n}\n",
      "c");
  const auto leaves = CollectLeaves(*m.classes[0].operations[0].body);
  ASSERT_EQ(leaves.size(), 3u);
  EXPECT_EQ(leaves[0]->text, "int a = 1");
  EXPECT_EQ(leaves[1]->text, "a = 2");
  EXPECT_EQ(leaves[2]->text, "return");
}

TEST(SourceLocationTest, ContainsAndOrder) {
  SourceLocation outer{"f", 1, 1, 10, 1};
  SourceLocation inner{"f", 2, 3, 4, 5};
  EXPECT_TRUE(outer.IsOrdered());
  EXPECT_TRUE(outer.Contains(inner));
  EXPECT_FALSE(inner.Contains(outer));
  EXPECT_EQ(LineSpan(inner), (std::vector<int>{2, 3, 4}));
}

}  // namespace
}  // namespace refminer
