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

#ifndef REFMINER_LEXER_H_
#define REFMINER_LEXER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "refminer/code_model.h"

namespace refminer {

enum class TokenKind : std::uint8_t {
  kIdentifier,
  kKeyword,
  kLiteral,
  kPunctuator,
  kComment,
  kPreprocessor,
};

std::string_view ToString(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::kPunctuator;
  std::string text;
  // end_column is the column of the last character.
  SourceLocation location;

  bool Is(std::string_view t) const {
    return text == t &&
           (kind == TokenKind::kPunctuator || kind == TokenKind::kKeyword);
  }
  bool IsIdentifier() const { return kind == TokenKind::kIdentifier; }
  bool operator==(const Token &) const = default;
};

// Base of all errors raised while turning source text into a model.
class FrontendError : public std::runtime_error {
 public:
  FrontendError(const SourceLocation &loc, const std::string &what);
  const SourceLocation &location() const { return location_; }

 private:
  SourceLocation location_;
};

class LexError : public FrontendError {
 public:
  using FrontendError::FrontendError;
};

bool IsKeyword(std::string_view word);

// Splits `source` into tokens. Comments and preprocessor directives are
// kept as tokens. Throws LexError on unterminated strings or comments.
// A ">>" is emitted as two adjacent ">" tokens so that nested template
// argument lists close naturally; ">>=" likewise becomes ">" ">=".
std::vector<Token> Tokenize(std::string_view source,
                            const std::string &file_id);

// Drops preprocessor tokens; remaining tokens keep their locations.
std::vector<Token> StripPreprocessor(std::vector<Token> tokens);

}  // namespace refminer

#endif  // REFMINER_LEXER_H_
