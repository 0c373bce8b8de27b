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

#ifndef REFMINER_MODEL_JSON_H_
#define REFMINER_MODEL_JSON_H_

// JSON interchange format for CodeModel.

#include <stdexcept>
#include <string>
#include <string_view>

#include "refminer/code_model.h"

namespace refminer {

// Raised for documents that are not valid JSON or do not follow the model
// schema. `path()` is a JSON pointer to the offending value.
class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(std::string path, const std::string &what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

// Deterministic: equal models produce byte-identical output.
std::string SerializeModel(const CodeModel &model);

CodeModel DeserializeModel(std::string_view data);

}  // namespace refminer

#endif  // REFMINER_MODEL_JSON_H_
