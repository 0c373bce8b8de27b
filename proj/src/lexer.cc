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

#include "refminer/lexer.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace refminer {

std::string_view ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kLiteral:
      return "literal";
    case TokenKind::kPunctuator:
      return "punctuator";
    case TokenKind::kComment:
      return "comment";
    case TokenKind::kPreprocessor:
      return "preprocessor";
  }
  return "?";
}

namespace {

std::string FormatLocation(const SourceLocation &loc) {
  std::string out = loc.file_id.empty() ? "<input>" : loc.file_id;
  out += ':' + std::to_string(loc.start_line) + ':' +
         std::to_string(loc.start_column);
  return out;
}

const std::unordered_set<std::string_view> &Keywords() {
  static const std::unordered_set<std::string_view> kKeywords = {
      "alignas",      "alignof",     "and",          "and_eq",
      "asm",          "auto",        "bitand",       "bitor",
      "bool",         "break",       "case",         "catch",
      "char",         "char8_t",     "char16_t",     "char32_t",
      "class",        "compl",       "concept",      "const",
      "consteval",    "constexpr",   "constinit",    "const_cast",
      "continue",     "co_await",    "co_return",    "co_yield",
      "decltype",     "default",     "delete",       "do",
      "double",       "dynamic_cast", "else",        "enum",
      "explicit",     "export",      "extern",       "false",
      "float",        "for",         "friend",       "goto",
      "if",           "inline",      "int",          "long",
      "mutable",      "namespace",   "new",          "noexcept",
      "not",          "not_eq",      "nullptr",      "operator",
      "or",           "or_eq",       "private",      "protected",
      "public",       "register",    "reinterpret_cast", "requires",
      "return",       "short",       "signed",       "sizeof",
      "static",       "static_assert", "static_cast", "struct",
      "switch",       "template",    "this",         "thread_local",
      "throw",        "true",        "try",          "typedef",
      "typeid",       "typename",    "union",        "unsigned",
      "using",        "virtual",     "void",         "volatile",
      "wchar_t",      "while",       "xor",          "xor_eq",
  };
  return kKeywords;
}

constexpr std::array<std::string_view, 4> kPunct3 = {"<=>", "->*", "...",
                                                     "<<="};
constexpr std::array<std::string_view, 21> kPunct2 = {
    "::", "->", "++", "--", "<<", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", ".*", "##"};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}
bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

class Lexer {
 public:
  Lexer(std::string_view src, const std::string &file_id)
      : src_(src), file_id_(file_id) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    while (true) {
      SkipWhitespace();
      if (AtEnd()) break;
      out.push_back(Next());
    }
    return out;
  }

 private:
  bool AtEnd() const { return pos_ >= src_.size(); }
  char Peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
      line_has_code_ = false;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipWhitespace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      Advance();
    }
  }

  SourceLocation Here() const {
    return SourceLocation{file_id_, line_, column_, line_, column_};
  }

  Token Finish(TokenKind kind, size_t begin, SourceLocation loc) {
    Token tok;
    tok.kind = kind;
    tok.text = std::string(src_.substr(begin, pos_ - begin));
    loc.end_line = last_line_;
    loc.end_column = last_column_;
    tok.location = std::move(loc);
    return tok;
  }

  // Advance and remember the position of the consumed character.
  void Take() {
    last_line_ = line_;
    last_column_ = column_;
    Advance();
  }

  Token Next() {
    const size_t begin = pos_;
    SourceLocation loc = Here();
    const char c = Peek();

    if (c == '#' && !line_has_code_) {
      while (!AtEnd() && Peek() != '\n') {
        if (Peek() == '\\' && Peek(1) == '\n') Take();
        Take();
      }
      return Finish(TokenKind::kPreprocessor, begin, loc);
    }
    line_has_code_ = true;

    if (c == '/' && Peek(1) == '/') {
      while (!AtEnd() && Peek() != '\n') Take();
      return Finish(TokenKind::kComment, begin, loc);
    }
    if (c == '/' && Peek(1) == '*') {
      Take();
      Take();
      while (!(Peek() == '*' && Peek(1) == '/')) {
        if (AtEnd()) throw LexError(loc, "unterminated comment");
        Take();
      }
      Take();
      Take();
      line_has_code_ = true;
      return Finish(TokenKind::kComment, begin, loc);
    }

    if (IsIdentStart(c)) {
      while (IsIdentChar(Peek())) Take();
      std::string_view word = src_.substr(begin, pos_ - begin);
      const bool string_prefix = word == "L" || word == "u" || word == "U" ||
                                 word == "u8" || word == "R" ||
                                 word == "LR" || word == "uR" ||
                                 word == "UR" || word == "u8R";
      if (string_prefix && (Peek() == '"' || Peek() == '\'')) {
        if (word.back() == 'R' && Peek() == '"') {
          LexRawString(loc);
        } else {
          LexQuoted(Peek(), loc);
        }
        return Finish(TokenKind::kLiteral, begin, loc);
      }
      return Finish(IsKeyword(word) ? TokenKind::kKeyword
                                    : TokenKind::kIdentifier,
                    begin, loc);
    }

    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(Peek(1))))) {
      while (true) {
        const char d = Peek();
        if ((d == '+' || d == '-') && pos_ > begin) {
          const char prev = src_[pos_ - 1];
          if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
            Take();
            continue;
          }
          break;
        }
        if (IsIdentChar(d) || d == '.' ||
            (d == '\'' && IsIdentChar(Peek(1)))) {
          Take();
          continue;
        }
        break;
      }
      return Finish(TokenKind::kLiteral, begin, loc);
    }

    if (c == '"' || c == '\'') {
      LexQuoted(c, loc);
      return Finish(TokenKind::kLiteral, begin, loc);
    }

    // A '>' directly followed by '>' is split so template lists close.
    if (c == '>' && Peek(1) == '>') {
      Take();
      return Finish(TokenKind::kPunctuator, begin, loc);
    }
    for (std::string_view p : kPunct3) {
      if (src_.substr(pos_, 3) == p) {
        Take();
        Take();
        Take();
        return Finish(TokenKind::kPunctuator, begin, loc);
      }
    }
    for (std::string_view p : kPunct2) {
      if (src_.substr(pos_, 2) == p) {
        Take();
        Take();
        return Finish(TokenKind::kPunctuator, begin, loc);
      }
    }
    Take();
    return Finish(TokenKind::kPunctuator, begin, loc);
  }

  void LexQuoted(char quote, const SourceLocation &loc) {
    Take();
    while (true) {
      if (AtEnd() || Peek() == '\n') {
        throw LexError(loc, quote == '"' ? "unterminated string literal"
                                         : "unterminated character literal");
      }
      if (Peek() == '\\') {
        Take();
        if (AtEnd()) continue;
        Take();
        continue;
      }
      if (Peek() == quote) {
        Take();
        return;
      }
      Take();
    }
  }

  void LexRawString(const SourceLocation &loc) {
    Take();  // opening quote
    std::string delim;
    while (!AtEnd() && Peek() != '(') {
      if (Peek() == '\n' || delim.size() > 16) {
        throw LexError(loc, "malformed raw string delimiter");
      }
      delim += Peek();
      Take();
    }
    if (AtEnd()) throw LexError(loc, "unterminated raw string literal");
    Take();
    const std::string terminator = ")" + delim + "\"";
    while (src_.substr(pos_, terminator.size()) != terminator) {
      if (AtEnd()) throw LexError(loc, "unterminated raw string literal");
      Take();
    }
    for (size_t i = 0; i < terminator.size(); ++i) Take();
  }

  std::string_view src_;
  const std::string &file_id_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int last_line_ = 1;
  int last_column_ = 1;
  bool line_has_code_ = false;
};

}  // namespace

FrontendError::FrontendError(const SourceLocation &loc, const std::string &what)
    : std::runtime_error(FormatLocation(loc) + ": " + what), location_(loc) {}

bool IsKeyword(std::string_view word) { return Keywords().contains(word); }

std::vector<Token> Tokenize(std::string_view source,
                            const std::string &file_id) {
  return Lexer(source, file_id).Run();
}

std::vector<Token> StripPreprocessor(std::vector<Token> tokens) {
  std::erase_if(tokens, [](const Token &t) {
    return t.kind == TokenKind::kPreprocessor;
  });
  return tokens;
}

}  // namespace refminer
