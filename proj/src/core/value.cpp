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

#include "clott/core/value.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace clott {

struct Value::Node {
  Tag tag;
  std::int64_t num = 0;
  std::string name;
  std::vector<Value> items;
  std::vector<Rational> weights;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Value Value::make(Tag tag, std::int64_t num, std::string name, std::vector<Value> items,
                  std::vector<Rational> weights) {
  auto node = std::make_shared<Node>();
  node->tag = tag;
  node->num = num;
  node->name = std::move(name);
  node->items = std::move(items);
  node->weights = std::move(weights);
  std::size_t h = mix(static_cast<std::size_t>(tag), std::hash<std::int64_t>{}(num));
  h = mix(h, std::hash<std::string>{}(node->name));
  for (const auto& it : node->items) h = mix(h, it.hash());
  for (const auto& w : node->weights) {
    h = mix(h, std::hash<std::int64_t>{}(w.numerator()));
    h = mix(h, std::hash<std::int64_t>{}(w.denominator()));
  }
  node->hash = h;
  return Value(std::move(node));
}

Value::Value() : Value(unit()) {}

Value Value::unit() {
  static const Value u = make(Tag::Unit, 0, {}, {}, {});
  return u;
}
Value Value::integer(std::int64_t n) { return make(Tag::Int, n, {}, {}, {}); }
Value Value::symbol(std::string name) { return make(Tag::Sym, 0, std::move(name), {}, {}); }
Value Value::inl(Value v) { return make(Tag::Inl, 0, {}, {std::move(v)}, {}); }
Value Value::inr(Value v) { return make(Tag::Inr, 0, {}, {std::move(v)}, {}); }
Value Value::tuple(std::vector<Value> items) { return make(Tag::Tuple, 0, {}, std::move(items), {}); }
Value Value::list(std::vector<Value> items) { return make(Tag::List, 0, {}, std::move(items), {}); }
Value Value::op(std::string name, std::vector<Value> args) {
  return make(Tag::Op, 0, std::move(name), std::move(args), {});
}

Value Value::set(std::vector<Value> items) {
  normalize(items);
  return make(Tag::Set, 0, {}, std::move(items), {});
}

Value Value::bag(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  return make(Tag::Bag, 0, {}, std::move(items), {});
}

Value Value::dist(std::vector<std::pair<Value, Rational>> weighted) {
  std::map<Value, Rational> merged;
  for (auto& [v, w] : weighted) merged[v] += w;
  std::vector<Value> points;
  std::vector<Rational> ws;
  for (auto& [v, w] : merged) {
    if (w.numerator() == 0) continue;
    if (w.numerator() < 0) throw std::invalid_argument("negative weight in distribution");
    points.push_back(v);
    ws.push_back(w);
  }
  return make(Tag::Dist, 0, {}, std::move(points), std::move(ws));
}

Value::Tag Value::tag() const { return node_->tag; }
std::int64_t Value::as_int() const { return node_->num; }
const std::string& Value::name() const { return node_->name; }
std::span<const Value> Value::items() const { return node_->items; }
std::span<const Rational> Value::weights() const { return node_->weights; }
std::size_t Value::hash() const { return node_->hash; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.tag <=> y.tag; c != 0) return c;
  if (auto c = x.num <=> y.num; c != 0) return c;
  if (auto c = x.name.compare(y.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const std::size_t n = std::min(x.items.size(), y.items.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = x.items[i] <=> y.items[i]; c != 0) return c;
  }
  if (auto c = x.items.size() <=> y.items.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.weights.size() && i < y.weights.size(); ++i) {
    if (x.weights[i] < y.weights[i]) return std::strong_ordering::less;
    if (y.weights[i] < x.weights[i]) return std::strong_ordering::greater;
  }
  return x.weights.size() <=> y.weights.size();
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string Value::str() const {
  const auto& n = *node_;
  auto join = [&](const char* open, const char* close) {
    std::string s = open;
    for (std::size_t i = 0; i < n.items.size(); ++i) {
      if (i) s += ", ";
      s += n.items[i].str();
    }
    return s + close;
  };
  switch (n.tag) {
    case Tag::Unit: return "*";
    case Tag::Int: return std::to_string(n.num);
    case Tag::Sym: return n.name;
    case Tag::Inl: return "inl(" + n.items[0].str() + ")";
    case Tag::Inr: return "inr(" + n.items[0].str() + ")";
    case Tag::Tuple: return join("(", ")");
    case Tag::Set: return join("{", "}");
    case Tag::Bag: return join("{|", "|}");
    case Tag::List: return join("[", "]");
    case Tag::Op: return n.name + join("(", ")");
    case Tag::Dist: {
      std::string s = "<";
      for (std::size_t i = 0; i < n.items.size(); ++i) {
        if (i) s += " + ";
        s += to_string(n.weights[i]) + ":" + n.items[i].str();
      }
      return s + ">";
    }
  }
  return "?";
}

void normalize(ValueSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

long index_of(const ValueSet& s, const Value& v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || !(*it == v)) return -1;
  return static_cast<long>(it - s.begin());
}

}  // namespace clott
