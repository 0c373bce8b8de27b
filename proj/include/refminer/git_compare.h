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

#ifndef REFMINER_GIT_COMPARE_H_
#define REFMINER_GIT_COMPARE_H_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "refminer/report.h"

namespace refminer {

// Not a repository, unknown revision, or a failing git invocation.
class GitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FileFailure {
  std::string path;
  std::string message;
};

struct CommitComparison {
  // One report per path present in both revisions, ordered by path.
  std::vector<ComparisonReport> reports;
  std::vector<std::string> added_files;
  std::vector<std::string> removed_files;
  std::vector<FileFailure> failures;
};

// Compares every file present in both revisions whose path matches
// `path_filter` (an fnmatch pattern; without one, C++ source and header
// extensions are selected).
CommitComparison CompareCommits(const std::filesystem::path &repo,
                                const std::string &rev_before,
                                const std::string &rev_after,
                                const std::optional<std::string> &path_filter,
                                bool report_behavior = true);

}  // namespace refminer

#endif  // REFMINER_GIT_COMPARE_H_
