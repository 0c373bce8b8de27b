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

#include <gtest/gtest.h>

#include <filesystem>
#include <tuple>

#include "refminer/parser.h"
#include "test_util.h"

namespace refminer {
namespace {

using Row = std::tuple<std::string, Detail, std::vector<int>>;

std::vector<Row> Rows(const Detection &d) {
  std::vector<Row> out;
  for (const Refactoring &r : d.refactorings) {
    out.emplace_back(std::string(ToString(r.type)), r.detail, r.affected_lines);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Detection DetectFiles(const std::filesystem::path &b,
                      const std::filesystem::path &a) {
  static std::vector<std::unique_ptr<CodeModel>> keep;
  keep.push_back(std::make_unique<CodeModel>(ParseFile(b)));
  const CodeModel &mb = *keep.back();
  keep.push_back(std::make_unique<CodeModel>(ParseFile(a)));
  const CodeModel &ma = *keep.back();
  return Detect(MatchModels(mb, ma), mb, ma);
}

TEST(DetectTest, GoldenListings) {
  const Detection d = DetectFiles(testing::DataPath("listing1.cpp"),
                                  testing::DataPath("listing2.cpp"));
  const std::string cls = "CircleCalculator";
  std::vector<Row> expected = {
      {"RenameClass", {{"before", "Circle"}, {"after", cls}}, {1}},
      {"AddAttributeModifier",
       {{"class", cls}, {"field", "PI"}, {"modifier", "inline"}}, {2}},
      {"AddAttributeModifier",
       {{"class", cls}, {"field", "PI"}, {"modifier", "static"}}, {2}},
      {"AddAttributeModifier",
       {{"class", cls}, {"field", "PI"}, {"modifier", "const"}}, {2}},
      {"RenameMethod",
       {{"class", cls}, {"before", "getArea"}, {"after", "calcArea"}}, {4}},
      {"AddMethodModifier",
       {{"class", cls}, {"method", "calcArea"}, {"modifier", "static"}}, {4}},
      {"RenameParameter",
       {{"class", cls}, {"method", "calcArea"}, {"before", "r"}, {"after", "radius"}},
       {4, 5}},
      {"AddMethodModifier",
       {{"class", cls}, {"method", "calcCircumference"}, {"modifier", "static"}},
       {11}},
  };
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(Rows(d), expected);
}

TEST(DetectTest, OutputOrderedByLocation) {
  const Detection d = DetectFiles(testing::DataPath("listing1.cpp"),
                                  testing::DataPath("listing2.cpp"));
  for (size_t i = 1; i < d.refactorings.size(); ++i) {
    EXPECT_LE(d.refactorings[i - 1].after_location.start_line,
              d.refactorings[i].after_location.start_line);
  }
}

TEST(DetectTest, IdentityIsEmpty) {
  for (const auto &dir :
       std::filesystem::directory_iterator(testing::CorpusDir())) {
    for (const char *side : {"before.cpp", "after.cpp"}) {
      const auto path = dir.path() / side;
      EXPECT_TRUE(DetectFiles(path, path).refactorings.empty()) << path;
    }
  }
}

TEST(DetectTest, PullUpFieldSuppressesMoveField) {
  const Detection d = DetectFiles(testing::DataPath("pullup_before.cpp"),
                                  testing::DataPath("pullup_after.cpp"));
  const std::vector<Row> expected = {
      {"PullUpField",
       {{"field", "weight"}, {"fromClass", "Derived"}, {"toClass", "Base"}},
       {3}}};
  EXPECT_EQ(Rows(d), expected);
}

TEST(DetectTest, MultipleInheritanceTwoPullUps) {
  const Detection d = DetectFiles(testing::DataPath("mi_before.cpp"),
                                  testing::DataPath("mi_after.cpp"));
  const std::vector<Row> expected = {
      {"PullUpField", {{"field", "x"}, {"fromClass", "D"}, {"toClass", "A"}}, {3}},
      {"PullUpField", {{"field", "y"}, {"fromClass", "D"}, {"toClass", "B"}}, {11}}};
  EXPECT_EQ(Rows(d), expected);
}

TEST(DetectTest, MoveFieldWithoutInheritance) {
  const CodeModel b = Parse("class X { int v = 0; };\nclass Y { int w; };\n", "b");
  const CodeModel a = Parse("class X { };\nclass Y { int w;\n int v = 0; };\n", "a");
  const Detection d = Detect(MatchModels(b, a), b, a);
  ASSERT_EQ(d.refactorings.size(), 1u);
  EXPECT_EQ(d.refactorings[0].type, RefactoringType::kMoveField);
  EXPECT_EQ(d.refactorings[0].affected_lines, std::vector<int>{3});
}

TEST(DetectTest, ModifierRemovalAndTypeChanges) {
  const CodeModel b = Parse(
      "class C {\n public:\n  static int f(int a) { return a; }\n"
      "  virtual void g() {}\n  int n = 0;\n};\n",
      "b");
  const CodeModel a = Parse(
      "class C {\n public:\n  int f(long a) { return a; }\n"
      "  void g() {}\n  const int n = 0;\n};\n",
      "a");
  const Detection d = Detect(MatchModels(b, a), b, a);
  std::vector<Row> expected = {
      {"RemoveMethodModifier",
       {{"class", "C"}, {"method", "f"}, {"modifier", "static"}}, {3}},
      {"ChangeParameterType",
       {{"class", "C"}, {"method", "f"}, {"parameter", "a"},
        {"before", "int"}, {"after", "long"}},
       {3}},
      {"RemoveMethodModifier",
       {{"class", "C"}, {"method", "g"}, {"modifier", "virtual"}}, {4}},
      {"AddAttributeModifier",
       {{"class", "C"}, {"field", "n"}, {"modifier", "const"}}, {5}},
  };
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(Rows(d), expected);
}

TEST(DetectTest, UnrelatedReplacementIsNotRename) {
  const CodeModel b = Parse(
      "class C {\n  int f(int a) {\n    int t = a * 2;\n    return t;\n  }\n};\n", "b");
  const CodeModel a = Parse(
      "class C {\n  int g(int a) {\n    log(a);\n    a = a + 7;\n    return 0;\n  }\n};\n",
      "a");
  const Detection d = Detect(MatchModels(b, a), b, a);
  EXPECT_TRUE(d.refactorings.empty());
}

TEST(DetectTest, Deterministic) {
  const auto b = testing::DataPath("listing1.cpp");
  const auto a = testing::DataPath("listing2.cpp");
  const Detection d1 = DetectFiles(b, a);
  const Detection d2 = DetectFiles(b, a);
  ASSERT_EQ(d1.refactorings.size(), d2.refactorings.size());
  for (size_t i = 0; i < d1.refactorings.size(); ++i) {
    EXPECT_EQ(d1.refactorings[i].type, d2.refactorings[i].type);
    EXPECT_EQ(d1.refactorings[i].detail, d2.refactorings[i].detail);
    EXPECT_EQ(d1.refactorings[i].description, d2.refactorings[i].description);
  }
}

TEST(RefactoringTypeTest, NamesRoundTrip) {
  for (RefactoringType t : kAllRefactoringTypes) {
    EXPECT_EQ(RefactoringTypeFromString(ToString(t)), t);
  }
  EXPECT_EQ(DisplayName(RefactoringType::kExtractAndMoveMethod),
            "Extract And Move Method");
  EXPECT_FALSE(RefactoringTypeFromString("Rename Class").has_value());
}

}  // namespace
}  // namespace refminer
