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

#include "clott/syntax/alg_term.hpp"

#include "clott/core/errors.hpp"

#include <cctype>

namespace clott::syntax {

namespace {

class AlgParser {
 public:
  AlgParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  AlgTerm parse() {
    AlgTerm t = term();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  AlgTerm term() {
    std::string name = ident();
    auto it = sig_.find(name);
    if (it == sig_.end()) {
      skip();
      if (pos_ < text_.size() && (text_[pos_] == '(' || text_[pos_] == '['))
        fail("unknown operation '" + name + "'");
      return AlgTerm::variable(name);
    }
    std::string index;
    if (eat('[')) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
      if (pos_ == text_.size()) fail("unterminated index");
      index = std::string(text_.substr(start, pos_ - start));
      while (!index.empty() && std::isspace(static_cast<unsigned char>(index.back()))) index.pop_back();
      while (!index.empty() && std::isspace(static_cast<unsigned char>(index.front()))) index.erase(0, 1);
      ++pos_;
    }
    std::vector<AlgTerm> args;
    if (eat('(')) {
      if (!eat(')')) {
        args.push_back(term());
        while (eat(',')) args.push_back(term());
        if (!eat(')')) fail("expected ')'");
      }
    }
    if (static_cast<int>(args.size()) != it->second)
      fail("operation '" + name + "' has arity " + std::to_string(it->second) + " but is applied to " +
           std::to_string(args.size()) + " arguments");
    return AlgTerm::op(name, std::move(args), std::move(index));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

void collect(const AlgTerm& t, std::set<std::string>& out) {
  if (t.is_var) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect(a, out);
}

}  // namespace

AlgTerm parse_alg_term(std::string_view text, const Signature& sig) { return AlgParser(text, sig).parse(); }

std::string print(const AlgTerm& t) {
  if (t.is_var) return t.name;
  std::string s = t.name;
  if (!t.index.empty()) s += "[" + t.index + "]";
  if (t.args.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ", ";
    s += print(t.args[i]);
  }
  return s + ")";
}

std::set<std::string> free_vars(const AlgTerm& t) {
  std::set<std::string> out;
  collect(t, out);
  return out;
}

std::size_t leaf_count(const AlgTerm& t) {
  if (t.is_var || t.args.empty()) return 1;
  std::size_t n = 0;
  for (const auto& a : t.args) n += leaf_count(a);
  return n;
}

}  // namespace clott::syntax
