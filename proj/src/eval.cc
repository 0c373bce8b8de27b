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

#include "refminer/eval.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "refminer/lexer.h"
#include "refminer/parser.h"
#include "refminer/report.h"

namespace refminer {

namespace {

using Json = nlohmann::ordered_json;

std::string FormatMetric(const std::optional<double> &value) {
  if (!value) return "n/a";
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << *value;
  return out.str();
}

Json MetricJson(const std::optional<double> &value) {
  return value ? Json(*value) : Json(nullptr);
}

Json FindingJson(const Finding &f) {
  Json detail = Json::object();
  for (const auto &[k, v] : f.detail) detail[k] = v;
  return Json{{"type", std::string(ToString(f.type))}, {"detail", detail}};
}

std::string Describe(const Finding &f) {
  std::string out(ToString(f.type));
  out += " {";
  bool first = true;
  for (const auto &[k, v] : f.detail) {
    out += (first ? "" : ", ") + k + "=" + v;
    first = false;
  }
  return out + "}";
}

}  // namespace

FixtureManifest LoadManifest(const std::filesystem::path &manifest_path) {
  const std::string fixture = manifest_path.parent_path().filename().string();
  std::ifstream in(manifest_path);
  if (!in) throw EvalError(fixture, "missing manifest.json");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw EvalError(fixture, std::string("invalid manifest: ") + e.what());
  }
  auto require_string = [&](const Json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key) || !obj[key].is_string()) {
      throw EvalError(fixture, std::string("manifest field '") + key +
                                   "' must be a string");
    }
    return obj[key].get<std::string>();
  };
  FixtureManifest m;
  m.id = require_string(doc, "id");
  const std::filesystem::path dir = manifest_path.parent_path();
  m.before = dir / require_string(doc, "before");
  m.after = dir / require_string(doc, "after");
  if (doc.contains("notes") && doc["notes"].is_string()) {
    m.notes = doc["notes"].get<std::string>();
  }
  if (!doc.contains("expected") || !doc["expected"].is_array()) {
    throw EvalError(fixture, "manifest field 'expected' must be an array");
  }
  for (const Json &entry : doc["expected"]) {
    const std::string type_name = require_string(entry, "type");
    const auto type = RefactoringTypeFromString(type_name);
    if (!type) {
      throw EvalError(fixture, "unknown refactoring type '" + type_name + "'");
    }
    Finding f{*type, {}};
    if (entry.contains("detail")) {
      if (!entry["detail"].is_object()) {
        throw EvalError(fixture, "'detail' must be an object");
      }
      for (const auto &[k, v] : entry["detail"].items()) {
        if (!v.is_string()) {
          throw EvalError(fixture, "detail value '" + k + "' must be a string");
        }
        f.detail[k] = v.get<std::string>();
      }
    }
    m.expected.push_back(std::move(f));
  }
  return m;
}

FixtureResult ScoreFixture(const std::string &id, std::vector<Finding> expected,
                           std::vector<Finding> detected) {
  FixtureResult r;
  r.id = id;
  std::sort(expected.begin(), expected.end());
  std::sort(detected.begin(), detected.end());
  std::set_intersection(expected.begin(), expected.end(), detected.begin(),
                        detected.end(), std::back_inserter(r.true_positives));
  std::set_difference(detected.begin(), detected.end(), expected.begin(),
                      expected.end(), std::back_inserter(r.false_positives));
  std::set_difference(expected.begin(), expected.end(), detected.begin(),
                      detected.end(), std::back_inserter(r.false_negatives));
  r.expected = std::move(expected);
  r.detected = std::move(detected);
  return r;
}

FixtureResult RunFixture(const FixtureManifest &manifest) {
  try {
    const CodeModel before = ParseFile(manifest.before);
    const CodeModel after = ParseFile(manifest.after);
    const ModelDiff diff = MatchModels(before, after);
    const Detection detection = Detect(diff, before, after);
    std::vector<Finding> detected;
    for (const Refactoring &r : detection.refactorings) {
      detected.push_back({r.type, r.detail});
    }
    return ScoreFixture(manifest.id, manifest.expected, std::move(detected));
  } catch (const FrontendError &e) {
    throw EvalError(manifest.id, e.what());
  } catch (const InputError &e) {
    throw EvalError(manifest.id, e.what());
  }
}

EvalResult RunEval(const std::filesystem::path &corpus_dir) {
  if (!std::filesystem::is_directory(corpus_dir)) {
    throw EvalError(corpus_dir.string(), "corpus directory not found");
  }
  std::vector<std::filesystem::path> dirs;
  for (const auto &entry : std::filesystem::directory_iterator(corpus_dir)) {
    if (entry.is_directory()) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());
  EvalResult result;
  for (const auto &dir : dirs) {
    const auto manifest = dir / "manifest.json";
    if (!std::filesystem::exists(manifest)) {
      throw EvalError(dir.filename().string(), "missing manifest.json");
    }
    FixtureResult fr = RunFixture(LoadManifest(manifest));
    result.true_positives += static_cast<int>(fr.true_positives.size());
    result.false_positives += static_cast<int>(fr.false_positives.size());
    result.false_negatives += static_cast<int>(fr.false_negatives.size());
    result.fixtures.push_back(std::move(fr));
  }
  if (result.fixtures.empty()) {
    result.warnings.push_back("corpus '" + corpus_dir.string() +
                              "' contains no fixtures");
  }
  return result;
}

std::optional<double> EvalResult::Precision() const {
  const int denom = true_positives + false_positives;
  if (denom == 0) return std::nullopt;
  return static_cast<double>(true_positives) / denom;
}

std::optional<double> EvalResult::Recall() const {
  const int denom = true_positives + false_negatives;
  if (denom == 0) return std::nullopt;
  return static_cast<double>(true_positives) / denom;
}

std::optional<double> EvalResult::F1() const {
  const auto p = Precision();
  const auto r = Recall();
  if (!p || !r) return std::nullopt;
  if (*p + *r == 0.0) return 0.0;
  return 2 * *p * *r / (*p + *r);
}

std::vector<TypeTally> EvalResult::PerType() const {
  std::vector<TypeTally> rows;
  for (RefactoringType type : kAllRefactoringTypes) {
    TypeTally t{type};
    for (const FixtureResult &f : fixtures) {
      auto count = [&](const std::vector<Finding> &list) {
        return static_cast<int>(std::count_if(
            list.begin(), list.end(),
            [&](const Finding &x) { return x.type == type; }));
      };
      t.expected += count(f.expected);
      t.detected += count(f.detected);
      t.true_positives += count(f.true_positives);
    }
    if (t.expected > 0 || t.detected > 0) rows.push_back(t);
  }
  return rows;
}

std::string RenderEvalText(const EvalResult &result) {
  std::ostringstream out;
  for (const std::string &w : result.warnings) out << "warning: " << w << "\n";
  out << std::left << std::setw(26) << "Refactoring type" << std::right
      << std::setw(10) << "expected" << std::setw(10) << "detected"
      << std::setw(6) << "TP" << "\n";
  for (const TypeTally &t : result.PerType()) {
    out << std::left << std::setw(26) << DisplayName(t.type) << std::right
        << std::setw(10) << t.expected << std::setw(10) << t.detected
        << std::setw(6) << t.true_positives << "\n";
  }
  for (const FixtureResult &f : result.fixtures) {
    for (const Finding &x : f.false_negatives) {
      out << "missed  [" << f.id << "] " << Describe(x) << "\n";
    }
    for (const Finding &x : f.false_positives) {
      out << "extra   [" << f.id << "] " << Describe(x) << "\n";
    }
  }
  out << "fixtures: " << result.fixtures.size()
      << "  TP: " << result.true_positives
      << "  FP: " << result.false_positives
      << "  FN: " << result.false_negatives << "\n";
  out << "precision: " << FormatMetric(result.Precision())
      << "  recall: " << FormatMetric(result.Recall())
      << "  F1: " << FormatMetric(result.F1()) << "\n";
  return out.str();
}

std::string RenderEvalJson(const EvalResult &result) {
  Json doc;
  doc["fixtures"] = Json::array();
  for (const FixtureResult &f : result.fixtures) {
    Json item;
    item["id"] = f.id;
    for (const auto &[key, list] :
         {std::pair{"expected", &f.expected}, std::pair{"detected", &f.detected},
          std::pair{"falsePositives", &f.false_positives},
          std::pair{"falseNegatives", &f.false_negatives}}) {
      item[key] = Json::array();
      for (const Finding &x : *list) item[key].push_back(FindingJson(x));
    }
    doc["fixtures"].push_back(std::move(item));
  }
  doc["perType"] = Json::array();
  for (const TypeTally &t : result.PerType()) {
    doc["perType"].push_back({{"type", std::string(ToString(t.type))},
                              {"expected", t.expected},
                              {"detected", t.detected},
                              {"truePositives", t.true_positives}});
  }
  doc["truePositives"] = result.true_positives;
  doc["falsePositives"] = result.false_positives;
  doc["falseNegatives"] = result.false_negatives;
  doc["precision"] = MetricJson(result.Precision());
  doc["recall"] = MetricJson(result.Recall());
  doc["f1"] = MetricJson(result.F1());
  doc["warnings"] = result.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace refminer
