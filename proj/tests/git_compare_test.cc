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

#include "refminer/git_compare.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "test_util.h"

namespace refminer {
namespace {

namespace fs = std::filesystem;

class GitCompareTest : public ::testing::Test {
 protected:
  void SetUp() override {
    repo_ = fs::temp_directory_path() /
            ("refminer_git_" +
             std::string(::testing::UnitTest::GetInstance()
                             ->current_test_info()
                             ->name()));
    fs::remove_all(repo_);
    fs::create_directories(repo_);
    Run("git init -q");
    Run("git config user.email test@example.com");
    Run("git config user.name test");
    fs::copy_file(testing::DataPath("listing1.cpp"), repo_ / "circle.cpp");
    std::ofstream(repo_ / "notes.txt") << "text\n";
    std::ofstream(repo_ / "gone.cpp") << "int g() { return 1; }\n";
    Run("git add . && git commit -q -m first && git tag v1");
    fs::copy_file(testing::DataPath("listing2.cpp"), repo_ / "circle.cpp",
                  fs::copy_options::overwrite_existing);
    fs::remove(repo_ / "gone.cpp");
    std::ofstream(repo_ / "new.cpp") << "int n() { return 2; }\n";
    Run("git add -A && git commit -q -m second && git tag v2");
  }
  void TearDown() override { fs::remove_all(repo_); }

  void Run(const std::string &cmd) {
    const std::string full = "cd '" + repo_.string() + "' && " + cmd;
    ASSERT_EQ(std::system(full.c_str()), 0) << cmd;
  }

  fs::path repo_;
};

TEST_F(GitCompareTest, MatchesFilePairRun) {
  const CommitComparison c = CompareCommits(repo_, "v1", "v2", std::nullopt);
  ASSERT_EQ(c.reports.size(), 1u);
  const ComparisonReport direct =
      CompareFiles(testing::DataPath("listing1.cpp"), testing::DataPath("listing2.cpp"));
  ASSERT_EQ(c.reports[0].refactorings.size(), direct.refactorings.size());
  for (size_t i = 0; i < direct.refactorings.size(); ++i) {
    EXPECT_EQ(c.reports[0].refactorings[i].type, direct.refactorings[i].type);
    EXPECT_EQ(c.reports[0].refactorings[i].detail, direct.refactorings[i].detail);
    EXPECT_EQ(c.reports[0].refactorings[i].affected_lines,
              direct.refactorings[i].affected_lines);
  }
  ASSERT_EQ(c.reports[0].behavior_changes.size(), direct.behavior_changes.size());
  for (size_t i = 0; i < direct.behavior_changes.size(); ++i) {
    const BehaviorChange &x = c.reports[0].behavior_changes[i];
    const BehaviorChange &y = direct.behavior_changes[i];
    EXPECT_EQ(x.kind, y.kind);
    EXPECT_EQ(x.first_line, y.first_line);
    EXPECT_EQ(x.last_line, y.last_line);
  }
  EXPECT_EQ(c.reports[0].before, "v1:circle.cpp");
  EXPECT_EQ(c.added_files, std::vector<std::string>{"new.cpp"});
  EXPECT_EQ(c.removed_files, std::vector<std::string>{"gone.cpp"});
  EXPECT_TRUE(c.failures.empty());
}

TEST_F(GitCompareTest, SameRevisionIsEmpty) {
  const CommitComparison c = CompareCommits(repo_, "v2", "v2", std::nullopt);
  ASSERT_FALSE(c.reports.empty());
  for (const ComparisonReport &r : c.reports) {
    EXPECT_TRUE(r.refactorings.empty());
    EXPECT_TRUE(r.behavior_changes.empty());
  }
}

TEST_F(GitCompareTest, FilterMatchingNothing) {
  const CommitComparison c = CompareCommits(repo_, "v1", "v2", "*.java");
  EXPECT_TRUE(c.reports.empty());
  EXPECT_TRUE(c.added_files.empty());
}

TEST_F(GitCompareTest, UnknownRevision) {
  EXPECT_THROW(CompareCommits(repo_, "v1", "nope", std::nullopt), GitError);
}

TEST(GitCompareErrorTest, NotARepository) {
  const fs::path dir = fs::temp_directory_path() / "refminer_not_a_repo";
  fs::create_directories(dir);
  EXPECT_THROW(CompareCommits(dir, "a", "b", std::nullopt), GitError);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace refminer
