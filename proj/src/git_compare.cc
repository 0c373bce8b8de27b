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

#include <fnmatch.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <set>

#include "refminer/lexer.h"

namespace refminer {

namespace {

std::string Quote(const std::string &arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

// Runs git with `args` in `repo`; returns stdout or throws GitError.
std::string Git(const std::filesystem::path &repo,
                const std::vector<std::string> &args) {
  std::string command = "git -C " + Quote(repo.string());
  for (const std::string &a : args) command += " " + Quote(a);
  command += " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) throw GitError("cannot run git");
  std::string output;
  std::array<char, 4096> buffer;
  size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw GitError("git " + args.front() + " failed");
  }
  return output;
}

std::string ResolveRevision(const std::filesystem::path &repo,
                            const std::string &rev) {
  try {
    std::string sha = Git(repo, {"rev-parse", "--verify", "--quiet",
                                 rev + "^{commit}"});
    while (!sha.empty() && (sha.back() == '\n' || sha.back() == '\r')) {
      sha.pop_back();
    }
    return sha;
  } catch (const GitError &) {
    throw GitError("cannot resolve revision '" + rev + "'");
  }
}

std::set<std::string> ListFiles(const std::filesystem::path &repo,
                                const std::string &sha) {
  const std::string out =
      Git(repo, {"ls-tree", "-r", "-z", "--name-only", sha});
  std::set<std::string> files;
  size_t start = 0;
  while (start < out.size()) {
    const size_t end = out.find('\0', start);
    files.insert(out.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return files;
}

bool Selected(const std::string &path,
              const std::optional<std::string> &filter) {
  if (filter) return fnmatch(filter->c_str(), path.c_str(), 0) == 0;
  static const std::array<std::string_view, 8> kExtensions = {
      ".cpp", ".cc", ".cxx", ".c++", ".h", ".hpp", ".hh", ".hxx"};
  const std::string ext = std::filesystem::path(path).extension().string();
  return std::find(kExtensions.begin(), kExtensions.end(), ext) !=
         kExtensions.end();
}

}  // namespace

CommitComparison CompareCommits(const std::filesystem::path &repo,
                                const std::string &rev_before,
                                const std::string &rev_after,
                                const std::optional<std::string> &path_filter,
                                bool report_behavior) {
  try {
    Git(repo, {"rev-parse", "--git-dir"});
  } catch (const GitError &) {
    throw GitError("not a git repository: '" + repo.string() + "'");
  }
  const std::string before = ResolveRevision(repo, rev_before);
  const std::string after = ResolveRevision(repo, rev_after);
  std::set<std::string> files_before, files_after;
  for (const std::string &f : ListFiles(repo, before)) {
    if (Selected(f, path_filter)) files_before.insert(f);
  }
  for (const std::string &f : ListFiles(repo, after)) {
    if (Selected(f, path_filter)) files_after.insert(f);
  }

  CommitComparison result;
  for (const std::string &f : files_before) {
    if (!files_after.contains(f)) result.removed_files.push_back(f);
  }
  for (const std::string &f : files_after) {
    if (!files_before.contains(f)) {
      result.added_files.push_back(f);
      continue;
    }
    const std::string src_before = Git(repo, {"show", before + ":" + f});
    const std::string src_after = Git(repo, {"show", after + ":" + f});
    try {
      result.reports.push_back(CompareSources(src_before, src_after,
                                              rev_before + ":" + f,
                                              rev_after + ":" + f,
                                              report_behavior));
    } catch (const FrontendError &e) {
      result.failures.push_back({f, e.what()});
    }
  }
  return result;
}

}  // namespace refminer
