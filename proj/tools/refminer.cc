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

// refminer: refactoring and behavior-change detection for two versions of a
// C++ source file.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "refminer/eval.h"
#include "refminer/git_compare.h"
#include "refminer/lexer.h"
#include "refminer/model_json.h"
#include "refminer/parser.h"
#include "refminer/report.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAnalysis = 2;

struct Options {
  std::string format = "text";
  bool report_behavior = true;
  std::string before;
  std::string after;
  std::string repo;
  std::string rev_before;
  std::string rev_after;
  std::optional<std::string> path_filter;
  std::string input;
};

void AddFormat(CLI::App *cmd, Options &opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void AddBehaviorFlag(CLI::App *cmd, Options &opts) {
  cmd->add_flag("--report-behavior,!--no-report-behavior",
                opts.report_behavior,
                "Report behavior-altering changes (default on)");
}

int CompareFilesCommand(const Options &opts) {
  const auto report = refminer::CompareFiles(opts.before, opts.after,
                                             opts.report_behavior);
  std::cout << (opts.format == "json" ? refminer::RenderJson(report)
                                      : refminer::RenderText(report));
  return kExitOk;
}

int CompareCommitsCommand(const Options &opts) {
  const auto result = refminer::CompareCommits(
      opts.repo, opts.rev_before, opts.rev_after, opts.path_filter,
      opts.report_behavior);
  for (const auto &f : result.failures) {
    std::cerr << "error: " << f.path << ": " << f.message << "\n";
  }
  if (opts.format == "json") {
    nlohmann::ordered_json doc;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto &r : result.reports) {
      doc["reports"].push_back(
          nlohmann::ordered_json::parse(refminer::RenderJson(r)));
    }
    doc["addedFiles"] = result.added_files;
    doc["removedFiles"] = result.removed_files;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto &r : result.reports) std::cout << refminer::RenderText(r);
    for (const auto &f : result.added_files) {
      std::cout << "added file (not analyzed): " << f << "\n";
    }
    for (const auto &f : result.removed_files) {
      std::cout << "removed file (not analyzed): " << f << "\n";
    }
  }
  return result.failures.empty() ? kExitOk : kExitAnalysis;
}

int DumpModelCommand(const Options &opts) {
  std::cout << refminer::SerializeModel(refminer::ParseFile(opts.input));
  return kExitOk;
}

int EvalCommand(const Options &opts) {
  const auto result = refminer::RunEval(opts.input);
  for (const auto &w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << (opts.format == "json" ? refminer::RenderEvalJson(result)
                                      : refminer::RenderEvalText(result));
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Detects refactorings and behavior changes between two "
               "versions of C++ code"};
  app.set_version_flag("--version", std::string(refminer::kToolVersion));
  app.require_subcommand(1);
  Options opts;

  auto *files = app.add_subcommand("compare-files", "Compare two source files");
  files->add_option("before", opts.before, "Older version")->required();
  files->add_option("after", opts.after, "Newer version")->required();
  AddFormat(files, opts);
  AddBehaviorFlag(files, opts);

  auto *commits = app.add_subcommand(
      "compare-commits", "Compare files present in two git revisions");
  commits->add_option("repo", opts.repo, "Repository working copy")
      ->required();
  commits->add_option("before", opts.rev_before, "Older revision")->required();
  commits->add_option("after", opts.rev_after, "Newer revision")->required();
  commits->add_option("--path", opts.path_filter,
                      "Only compare paths matching this glob");
  AddFormat(commits, opts);
  AddBehaviorFlag(commits, opts);

  auto *dump = app.add_subcommand("dump-model",
                                  "Print the JSON model of a source file");
  dump->add_option("path", opts.input, "Source file")->required();

  auto *eval = app.add_subcommand("eval", "Score detection on a fixture corpus");
  eval->add_option("corpus", opts.input, "Corpus directory")->required();
  AddFormat(eval, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (files->parsed()) return CompareFilesCommand(opts);
    if (commits->parsed()) return CompareCommitsCommand(opts);
    if (dump->parsed()) return DumpModelCommand(opts);
    if (eval->parsed()) return EvalCommand(opts);
  } catch (const refminer::FrontendError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const refminer::InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const refminer::GitError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  } catch (const refminer::EvalError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
  return kExitUsage;
}
