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

// Acceptance checks. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "refminer/behavior.h"
#include "refminer/detectors.h"
#include "refminer/eval.h"
#include "refminer/matcher.h"
#include "refminer/model_json.h"
#include "refminer/parser.h"
#include "refminer/report.h"

namespace fs = std::filesystem;
using namespace refminer;

namespace {

const fs::path kRoot = REFMINER_SOURCE_DIR;
const fs::path kData = kRoot / "tests" / "data";
const fs::path kCorpus = kRoot / "corpus";

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string Join(const std::vector<int> &v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::pair<fs::path, fs::path>> FixturePairs() {
  std::vector<std::pair<fs::path, fs::path>> pairs;
  for (const auto &dir : fs::directory_iterator(kCorpus)) {
    pairs.emplace_back(dir.path() / "before.cpp", dir.path() / "after.cpp");
  }
  std::sort(pairs.begin(), pairs.end());
  for (const char *name : {"listing", "mi", "pullup", "sum"}) {
    const std::string n = name;
    if (n == "listing") {
      pairs.emplace_back(kData / "listing1.cpp", kData / "listing2.cpp");
    } else {
      pairs.emplace_back(kData / (n + "_before.cpp"), kData / (n + "_after.cpp"));
    }
  }
  return pairs;
}

std::vector<fs::path> FixtureFiles() {
  std::vector<fs::path> files;
  for (const auto &[b, a] : FixturePairs()) {
    files.push_back(b);
    files.push_back(a);
  }
  return files;
}

// Each check returns an empty string on success, else a failure reason.
std::string GoldenRefactorings() {
  const auto start = std::chrono::steady_clock::now();
  const ComparisonReport r =
      CompareFiles(kData / "listing1.cpp", kData / "listing2.cpp");
  const double elapsed = SecondsSince(start);
  const std::multiset<std::string> expected = {
      "Rename Class | 1",
      "Add Attribute Modifier (inline) | 2",
      "Add Attribute Modifier (static) | 2",
      "Add Attribute Modifier (const) | 2",
      "Rename Method | 4",
      "Add Method Modifier (static) | 4",
      "Rename Parameter | 4,5",
      "Add Method Modifier (static) | 11",
  };
  std::multiset<std::string> actual;
  for (const Refactoring &f : r.refactorings) {
    std::string row = DisplayName(f.type);
    if (auto it = f.detail.find("modifier"); it != f.detail.end()) {
      row += " (" + it->second + ")";
    }
    actual.insert(row + " | " + Join(f.affected_lines));
  }
  if (actual != expected) {
    std::string got;
    for (const std::string &s : actual) got += "[" + s + "] ";
    return "got " + got;
  }
  if (elapsed >= 1.0) return "took " + std::to_string(elapsed) + " s";
  return "";
}

std::string GoldenBehavior() {
  const ComparisonReport r =
      CompareFiles(kData / "listing1.cpp", kData / "listing2.cpp");
  std::vector<std::string> actual;
  for (const BehaviorChange &c : r.behavior_changes) {
    actual.push_back(std::string(ToString(c.kind)) + " " +
                     FormatLineRange(c.first_line, c.last_line));
  }
  const std::vector<std::string> expected = {"method-added 7-10",
                                             "statement-modified 12"};
  if (actual != expected) {
    std::string got;
    for (const std::string &s : actual) got += "[" + s + "] ";
    return "got " + got;
  }
  std::set<int> refactored;
  for (const Refactoring &f : r.refactorings) {
    refactored.insert(f.affected_lines.begin(), f.affected_lines.end());
  }
  for (const BehaviorChange &c : r.behavior_changes) {
    for (int l = c.first_line; l <= c.last_line; ++l) {
      if (refactored.contains(l)) return "overlap on line " + std::to_string(l);
    }
  }
  return "";
}

std::string SeededCorpus() {
  const auto start = std::chrono::steady_clock::now();
  const EvalResult r = RunEval(kCorpus);
  const double elapsed = SecondsSince(start);
  if (r.fixtures.size() != 16) {
    return std::to_string(r.fixtures.size()) + " fixtures";
  }
  if (r.Recall() != 1.0 || r.Precision() != 1.0) {
    return "precision/recall below 1:\n" + RenderEvalText(r);
  }
  if (elapsed >= 10.0) return "took " + std::to_string(elapsed) + " s";
  return "";
}

std::string Identity() {
  for (const fs::path &f : FixtureFiles()) {
    const ComparisonReport r = CompareFiles(f, f);
    if (!r.refactorings.empty() || !r.behavior_changes.empty()) {
      return f.string() + " is not empty against itself";
    }
  }
  return "";
}

std::string RoundTrip() {
  for (const fs::path &f : FixtureFiles()) {
    const CodeModel m = ParseFile(f);
    if (DeserializeModel(SerializeModel(m)) != m) return f.string();
  }
  return "";
}

std::string Partition() {
  for (const auto &[bp, ap] : FixturePairs()) {
    const CodeModel b = ParseFile(bp);
    const CodeModel a = ParseFile(ap);
    const ModelDiff d = MatchModels(b, a);
    const std::string where = bp.parent_path().filename().string() + "/" +
                              bp.filename().string();
    if (d.class_matches.size() + d.removed_classes.size() != b.classes.size() ||
        d.class_matches.size() + d.added_classes.size() != a.classes.size()) {
      return where + ": classes";
    }
    size_t ops_b = 0, ops_a = 0, attrs_b = 0, attrs_a = 0, leaves_b = 0,
           leaves_a = 0;
    size_t total_ops_b = 0, total_ops_a = 0, total_attrs_b = 0,
           total_attrs_a = 0, total_leaves_b = 0, total_leaves_a = 0;
    auto leaves = [](const OperationDecl &op) {
      return op.body ? CollectLeaves(*op.body).size() : size_t{0};
    };
    for (const ClassDecl &c : b.classes) {
      total_ops_b += c.operations.size();
      total_attrs_b += c.attributes.size();
      for (const OperationDecl &op : c.operations) total_leaves_b += leaves(op);
    }
    for (const ClassDecl &c : a.classes) {
      total_ops_a += c.operations.size();
      total_attrs_a += c.attributes.size();
      for (const OperationDecl &op : c.operations) total_leaves_a += leaves(op);
    }
    for (const ClassDecl *c : d.removed_classes) {
      ops_b += c->operations.size();
      attrs_b += c->attributes.size();
      for (const OperationDecl &op : c->operations) leaves_b += leaves(op);
    }
    for (const ClassDecl *c : d.added_classes) {
      ops_a += c->operations.size();
      attrs_a += c->attributes.size();
      for (const OperationDecl &op : c->operations) leaves_a += leaves(op);
    }
    for (const ClassMatch &cm : d.class_matches) {
      ops_b += cm.operations.size() + cm.removed_operations.size();
      ops_a += cm.operations.size() + cm.added_operations.size();
      attrs_b += cm.attributes.size() + cm.removed_attributes.size();
      attrs_a += cm.attributes.size() + cm.added_attributes.size();
      for (const OperationDecl *op : cm.removed_operations) leaves_b += leaves(*op);
      for (const OperationDecl *op : cm.added_operations) leaves_a += leaves(*op);
      for (const OperationMatch &om : cm.operations) {
        size_t mapped = 0;
        for (const StatementMapping &m : om.body.mappings) {
          if (m.before->IsLeaf()) ++mapped;
        }
        leaves_b += mapped + om.body.unmatched_before.size();
        leaves_a += mapped + om.body.unmatched_after.size();
      }
    }
    if (ops_b != total_ops_b || ops_a != total_ops_a) return where + ": operations";
    if (attrs_b != total_attrs_b || attrs_a != total_attrs_a) {
      return where + ": attributes";
    }
    if (leaves_b != total_leaves_b || leaves_a != total_leaves_a) {
      return where + ": leaf statements";
    }
  }
  return "";
}

std::string MultipleInheritance() {
  const ComparisonReport r =
      CompareFiles(kData / "mi_before.cpp", kData / "mi_after.cpp");
  std::multiset<std::string> actual;
  for (const Refactoring &f : r.refactorings) {
    actual.insert(std::string(ToString(f.type)) + " " + f.detail.at("field") +
                  "->" + f.detail.at("toClass"));
  }
  const std::multiset<std::string> expected = {"PullUpField x->A",
                                               "PullUpField y->B"};
  if (actual != expected) {
    std::string got;
    for (const std::string &s : actual) got += "[" + s + "] ";
    return "got " + got;
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
      {"golden example: 8 refactorings with exact lines, under 1 s",
       GoldenRefactorings},
      {"golden example: behavior changes method-added 7-10, statement-modified 12",
       GoldenBehavior},
      {"seeded corpus: 16 fixtures, precision = recall = 1.0, under 10 s",
       SeededCorpus},
      {"identity: compare(f, f) is empty for every fixture file", Identity},
      {"round trip: deserialize(serialize(parse(f))) == parse(f)", RoundTrip},
      {"partition: classes, operations, attributes, leaves reconcile", Partition},
      {"multiple inheritance: two PullUpField findings", MultipleInheritance},
  };
  int failed = 0;
  for (const auto &[name, check] : checks) {
    std::string reason;
    try {
      reason = check();
    } catch (const std::exception &e) {
      reason = std::string("exception: ") + e.what();
    }
    if (reason.empty()) {
      std::cout << "[PASS] " << name << "\n";
    } else {
      ++failed;
      std::cout << "[FAIL] " << name << ": " << reason << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}
