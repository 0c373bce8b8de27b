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

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "refminer/parser.h"
#include "refminer/report.h"
#include "test_util.h"

namespace refminer {
namespace {

using testing::DataPath;
using Change = std::tuple<std::string, int, int>;

std::vector<Change> Changes(const ComparisonReport &r) {
  std::vector<Change> out;
  for (const BehaviorChange &c : r.behavior_changes) {
    out.emplace_back(std::string(ToString(c.kind)), c.first_line, c.last_line);
  }
  return out;
}

TEST(BehaviorTest, GoldenListings) {
  const ComparisonReport r =
      CompareFiles(DataPath("listing1.cpp"), DataPath("listing2.cpp"));
  const std::vector<Change> expected = {{"method-added", 7, 10},
                                        {"statement-modified", 12, 12}};
  EXPECT_EQ(Changes(r), expected);
  std::set<int> refactored;
  for (const Refactoring &f : r.refactorings) {
    refactored.insert(f.affected_lines.begin(), f.affected_lines.end());
  }
  for (const BehaviorChange &c : r.behavior_changes) {
    for (int line = c.first_line; line <= c.last_line; ++line) {
      EXPECT_FALSE(refactored.contains(line)) << line;
    }
  }
}

TEST(BehaviorTest, SingleOperatorEdit) {
  const ComparisonReport r =
      CompareFiles(DataPath("sum_before.cpp"), DataPath("sum_after.cpp"));
  EXPECT_TRUE(r.refactorings.empty());
  const std::vector<Change> expected = {{"statement-modified", 3, 3}};
  EXPECT_EQ(Changes(r), expected);
}

TEST(BehaviorTest, IdentityIsEmpty) {
  for (const auto &dir :
       std::filesystem::directory_iterator(testing::CorpusDir())) {
    const auto f = dir.path() / "after.cpp";
    EXPECT_TRUE(CompareFiles(f, f).behavior_changes.empty()) << f;
  }
}

TEST(BehaviorTest, AddedRemovedStatementsAndMethods) {
  const std::string before =
      "class C {\n public:\n  int f(int a) {\n    a = a + 1;\n    return a;\n"
      "  }\n  void old() {\n    g();\n  }\n};\n";
  const std::string after =
      "class C {\n public:\n  int f(int a) {\n    return a;\n  }\n"
      "  void fresh(int z) {\n    h(z, 1, 2);\n  }\n};\n";
  const ComparisonReport r = CompareSources(before, after, "b", "a");
  EXPECT_TRUE(r.refactorings.empty());
  const std::vector<Change> expected = {{"statement-removed", 4, 4},
                                        {"method-added", 6, 8},
                                        {"method-removed", 7, 9}};
  EXPECT_EQ(Changes(r), expected);
}

TEST(BehaviorTest, ReorderingIsNotAChange) {
  const std::string before = "void f() {\n  a();\n  b();\n}\n";
  const std::string after = "void f() {\n  b();\n  a();\n}\n";
  const ComparisonReport r = CompareSources(before, after, "b", "a");
  EXPECT_TRUE(r.behavior_changes.empty());
}

TEST(BehaviorTest, ModifiedConditionReportsHeaderLine) {
  const std::string before =
      "int f(int x) {\n  if (x > 0) {\n    return 1;\n  }\n  return 0;\n}\n";
  const std::string after =
      "int f(int x) {\n  if (x >= 0) {\n    return 1;\n  }\n  return 0;\n}\n";
  const ComparisonReport r = CompareSources(before, after, "b", "a");
  const std::vector<Change> expected = {{"statement-modified", 2, 2}};
  EXPECT_EQ(Changes(r), expected);
}

TEST(BehaviorTest, KindNamesRoundTrip) {
  for (auto k : {BehaviorChangeKind::kMethodAdded, BehaviorChangeKind::kMethodRemoved,
                 BehaviorChangeKind::kStatementModified,
                 BehaviorChangeKind::kStatementAdded,
                 BehaviorChangeKind::kStatementRemoved}) {
    EXPECT_EQ(BehaviorChangeKindFromString(ToString(k)), k);
  }
}

}  // namespace
}  // namespace refminer
