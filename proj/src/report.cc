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

#include "refminer/report.h"

#include <sstream>

#include "json.hpp"
#include "refminer/matcher.h"
#include "refminer/parser.h"

namespace refminer {

namespace {

ComparisonReport Compare(const CodeModel &before, const CodeModel &after,
                         bool report_behavior) {
  ComparisonReport report;
  report.before = before.file_id;
  report.after = after.file_id;
  const ModelDiff diff = MatchModels(before, after);
  Detection detection = Detect(diff, before, after);
  if (report_behavior) {
    report.behavior_changes = ReportBehaviorChanges(diff, detection);
  }
  report.refactorings = std::move(detection.refactorings);
  return report;
}

}  // namespace

ComparisonReport CompareSources(std::string_view before_source,
                                std::string_view after_source,
                                const std::string &before_id,
                                const std::string &after_id,
                                bool report_behavior) {
  const CodeModel before = Parse(before_source, before_id);
  const CodeModel after = Parse(after_source, after_id);
  return Compare(before, after, report_behavior);
}

ComparisonReport CompareFiles(const std::filesystem::path &before,
                              const std::filesystem::path &after,
                              bool report_behavior) {
  const CodeModel b = ParseFile(before);
  const CodeModel a = ParseFile(after);
  return Compare(b, a, report_behavior);
}

std::string FormatLineRange(int first, int last) {
  if (first == last) return std::to_string(first);
  return std::to_string(first) + "-" + std::to_string(last);
}

std::string RenderJson(const ComparisonReport &report) {
  nlohmann::ordered_json doc;
  doc["before"] = report.before;
  doc["after"] = report.after;
  doc["refactorings"] = nlohmann::ordered_json::array();
  for (const Refactoring &r : report.refactorings) {
    nlohmann::ordered_json item;
    item["type"] = std::string(ToString(r.type));
    item["description"] = r.description;
    item["affectedLines"] = r.affected_lines;
    doc["refactorings"].push_back(std::move(item));
  }
  doc["behaviorChanges"] = nlohmann::ordered_json::array();
  for (const BehaviorChange &c : report.behavior_changes) {
    nlohmann::ordered_json item;
    item["kind"] = std::string(ToString(c.kind));
    item["lines"] = {c.first_line, c.last_line};
    doc["behaviorChanges"].push_back(std::move(item));
  }
  doc["toolVersion"] = report.tool_version;
  return doc.dump(2) + "\n";
}

std::string RenderText(const ComparisonReport &report) {
  std::ostringstream out;
  out << "Comparing " << report.before << " -> " << report.after << "\n";
  out << "Refactorings (" << report.refactorings.size() << "):\n";
  for (const Refactoring &r : report.refactorings) {
    out << "  " << ToString(r.type) << "\t" << r.description << "\tlines ";
    for (size_t i = 0; i < r.affected_lines.size(); ++i) {
      out << (i ? "," : "") << r.affected_lines[i];
    }
    out << "\n";
  }
  out << "Behavior changes (" << report.behavior_changes.size() << "):\n";
  for (const BehaviorChange &c : report.behavior_changes) {
    out << "  " << ToString(c.kind) << "\tlines "
        << FormatLineRange(c.first_line, c.last_line) << "\n";
  }
  return out.str();
}

}  // namespace refminer
