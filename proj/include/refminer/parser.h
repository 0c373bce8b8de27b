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

#ifndef REFMINER_PARSER_H_
#define REFMINER_PARSER_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "refminer/code_model.h"
#include "refminer/lexer.h"

namespace refminer {

class ParseError : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

// Input is valid C++ but uses a construct outside the supported subset
// (lambda expressions, nested classes, local classes, ...).
class UnsupportedConstructError : public FrontendError {
 public:
  UnsupportedConstructError(const SourceLocation &loc, std::string construct)
      : FrontendError(loc, "unsupported construct: " + construct),
        construct_(std::move(construct)) {}
  const std::string &construct() const { return construct_; }

 private:
  std::string construct_;
};

// A source file could not be read.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses one translation unit of the supported C++ subset.
//
//  - namespaces become packages ("a::b");
//  - classes and structs become ClassDecls, structs defaulting to public;
//  - namespace-level functions and variables go to the artificial
//    "<globals>" class of their namespace (created only when non-empty);
//  - each base-class clause yields one Generalization;
//  - preprocessor lines, using-directives/declarations, typedefs, enums,
//    friend declarations and static_asserts are skipped.
CodeModel Parse(std::string_view source, const std::string &file_id);

// Reads `path` (UTF-8) and parses it, using the path string as file id
// unless `file_id` is given.
CodeModel ParseFile(const std::filesystem::path &path,
                    const std::string &file_id = "");

// Canonical text for a token run: tokens separated by single spaces,
// except around "::", "(", ")", ",", ".", "->", "[", "]".
std::string NormalizeTokens(const Token *begin, const Token *end);

}  // namespace refminer

#endif  // REFMINER_PARSER_H_
