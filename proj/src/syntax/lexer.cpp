/*
 * Copyright 2026 The clott Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lexer.hpp"

#include "clott/syntax/parse.hpp"

#include <array>
#include <cctype>
#include <set>

namespace clott::syntax {

bool is_keyword(const std::string& word) {
  static const std::set<std::string> words = {
      "fun",  "tick",  "clock", "forall-clk", "forall-clk^", "later", "later^", "Pi^",  "Sigma^", "exists^",
      "all^", "case",  "of",    "inl",        "inr",         "fst",   "snd",    "abort", "tirr",  "cirr",
      "force", "Id",   "Id^",   "eq^",        "tt",          "refl",  "Unit",   "Empty", "fix",   "U",
      "Prop", "El",    "Prf",   "In",         "Unit^",       "Empty^", "Top^",  "Bot^",  "var",   "def",
      "check", "conv", "fail"};
  return words.count(word) > 0;
}

namespace detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

std::vector<Token> lex(std::string_view text, int first_line) {
  static const std::array<const char*, 20> symbols = {"->", "+^", "/\\", "\\/", "==", ":=", "=>", "(", ")", "[",
                                                      "]",  "{",  "}",   ",",   ":",  ".",  "*",  "+",  "|", "="};
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "--") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (word == "forall" && text.substr(j, 4) == "-clk") {
        word += "-clk";
        j += 4;
      }
      if (j < text.size() && text[j] == '^') {
        if (is_keyword(word + "^")) {
          word += "^";
          ++j;
        }
      }
      advance(j - i);
      out.push_back({is_keyword(word) ? Token::Type::Keyword : Token::Type::Ident, word, tl, tc});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::Number, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    bool matched = false;
    for (const char* s : symbols) {
      std::string_view sv(s);
      if (text.substr(i, sv.size()) == sv) {
        out.push_back({Token::Type::Symbol, std::string(sv), tl, tc});
        advance(sv.size());
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  out.push_back({Token::Type::End, "", line, col});
  return out;
}

}  // namespace detail
}  // namespace clott::syntax
