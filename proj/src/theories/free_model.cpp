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

#include "clott/theories/free_model.hpp"

#include "clott/core/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace clott::theories {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Apart: return "apart";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

ValueSet standard_set(std::size_t n) {
  ValueSet out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Value::integer(static_cast<std::int64_t>(i)));
  return out;
}

std::optional<std::size_t> FreeModel::predicted_size(std::size_t) const { return std::nullopt; }

Value FreeModel::multiply(const Value&) const {
  throw std::logic_error("multiplication is only available for builtin theories");
}

Value FreeModel::sample(const ValueSet& S, std::mt19937_64& rng) const {
  ValueSet c = carrier(S);
  if (c.empty()) throw std::invalid_argument("empty carrier");
  return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
}

Verdict FreeModel::equal(const Value& a, const Value& b, const ValueSet&) const {
  return a == b ? Verdict::Equal : Verdict::Apart;
}

bool FreeModel::contains(const Value& t, const ValueSet& sub, const ValueSet& X) const {
  SetFn incl = [](const Value& v) { return v; };
  for (const Value& s : carrier(sub))
    if (equal(map(incl, s, X), t, X) == Verdict::Equal) return true;
  return false;
}

namespace {

void check_budget(const FreeModel& m, std::size_t n) {
  if (auto p = m.predicted_size(n); p && *p > m.budget().max_elements)
    throw BudgetExceeded("carrier of " + m.theory().name + " on " + std::to_string(n) + " generators has " +
                         std::to_string(*p) + " elements, over the budget of " +
                         std::to_string(m.budget().max_elements));
}

std::size_t saturating_pow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > (std::size_t(1) << 62) / b) return std::size_t(1) << 62;
    r *= b;
  }
  return r;
}

class SemilatticeModel : public FreeModel {
 public:
  using FreeModel::FreeModel;
  bool exact() const override { return true; }
  std::optional<std::size_t> predicted_size(std::size_t n) const override { return saturating_pow(2, n); }
  ValueSet carrier(const ValueSet& X) const override {
    check_budget(*this, X.size());
    ValueSet out;
    std::size_t n = X.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
      std::vector<Value> items;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) items.push_back(X[i]);
      out.push_back(Value::set(std::move(items)));
    }
    normalize(out);
    return out;
  }
  Value unit(const Value& x) const override { return Value::set({x}); }
  Value map(const SetFn& f, const Value& t, const ValueSet&) const override {
    std::vector<Value> items;
    for (const Value& v : t.items()) items.push_back(f(v));
    return Value::set(std::move(items));
  }
  Value multiply(const Value& tt) const override {
    std::vector<Value> items;
    for (const Value& inner : tt.items())
      for (const Value& v : inner.items()) items.push_back(v);
    return Value::set(std::move(items));
  }
  ValueSet occurring(const Value& t) const override { return ValueSet(t.items().begin(), t.items().end()); }
  Value sample(const ValueSet& S, std::mt19937_64& rng) const override {
    std::vector<Value> items;
    if (!S.empty()) {
      std::size_t k = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
      for (std::size_t i = 0; i < k; ++i)
        items.push_back(S[std::uniform_int_distribution<std::size_t>(0, S.size() - 1)(rng)]);
    }
    return Value::set(std::move(items));
  }
};

class ConvexModel : public FreeModel {
 public:
  using FreeModel::FreeModel;
  bool exact() const override { return true; }
  ValueSet carrier(const ValueSet& X) const override {
    ValueSet out;
    std::size_t n = X.size();
    if (n == 0) return out;
    std::vector<std::int64_t> parts(n);
    for (int L = 1; L <= budget_.denominator; ++L) {
      // compositions of L into n non-negative parts
      std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == n) {
          parts[i] = left;
          std::vector<std::pair<Value, Rational>> w;
          for (std::size_t j = 0; j < n; ++j)
            if (parts[j] > 0) w.emplace_back(X[j], Rational(parts[j], L));
          out.push_back(Value::dist(std::move(w)));
          if (out.size() > budget_.max_elements * 4) throw BudgetExceeded("convex carrier over budget");
          return;
        }
        for (std::int64_t k = 0; k <= left; ++k) {
          parts[i] = k;
          rec(i + 1, left - k);
        }
      };
      rec(0, L);
    }
    normalize(out);
    if (out.size() > budget_.max_elements) throw BudgetExceeded("convex carrier over budget");
    return out;
  }
  Value unit(const Value& x) const override { return Value::dist({{x, Rational(1)}}); }
  Value map(const SetFn& f, const Value& t, const ValueSet&) const override {
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t i = 0; i < t.size(); ++i) w.emplace_back(f(t.item(i)), t.weights()[i]);
    return Value::dist(std::move(w));
  }
  Value multiply(const Value& tt) const override {
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t i = 0; i < tt.size(); ++i) {
      const Value& inner = tt.item(i);
      for (std::size_t j = 0; j < inner.size(); ++j)
        w.emplace_back(inner.item(j), tt.weights()[i] * inner.weights()[j]);
    }
    return Value::dist(std::move(w));
  }
  ValueSet occurring(const Value& t) const override { return ValueSet(t.items().begin(), t.items().end()); }
  Value sample(const ValueSet& S, std::mt19937_64& rng) const override {
    if (S.empty()) throw std::invalid_argument("empty carrier");
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<std::pair<Value, std::int64_t>> raw;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t w = std::uniform_int_distribution<std::int64_t>(1, budget_.denominator)(rng);
      raw.emplace_back(S[std::uniform_int_distribution<std::size_t>(0, S.size() - 1)(rng)], w);
      total += w;
    }
    std::vector<std::pair<Value, Rational>> w;
    for (auto& [v, k2] : raw) w.emplace_back(v, Rational(k2, total));
    return Value::dist(std::move(w));
  }
};

// C(n+l-1, l), saturating
std::size_t multisets(std::size_t n, std::size_t l) {
  if (n == 0) return l == 0 ? 1 : 0;
  constexpr std::size_t cap = std::size_t(1) << 62;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= l; ++i) {
    if (c > cap / (n + i - 1)) return cap;
    c = c * (n + i - 1) / i;
  }
  return c;
}

class WordModel : public FreeModel {
 public:
  WordModel(Theory th, Budget b, bool commutative) : FreeModel(std::move(th), b), commutative_(commutative) {}
  bool exact() const override { return true; }
  std::optional<std::size_t> predicted_size(std::size_t n) const override {
    std::size_t total = 0;
    constexpr std::size_t cap = std::size_t(1) << 62;
    for (int l = 0; l <= budget_.max_length; ++l) {
      std::size_t words = commutative_ ? multisets(n, static_cast<std::size_t>(l)) : saturating_pow(n, static_cast<std::size_t>(l));
      total = std::min(cap, total + words);
    }
    return total;
  }
  ValueSet carrier(const ValueSet& X) const override {
    check_budget(*this, X.size());
    ValueSet out;
    std::vector<Value> word;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      out.push_back(make(word));
      if (static_cast<int>(word.size()) == budget_.max_length) return;
      for (std::size_t i = commutative_ ? from : 0; i < X.size(); ++i) {
        word.push_back(X[i]);
        rec(i);
        word.pop_back();
      }
    };
    rec(0);
    normalize(out);
    return out;
  }
  Value unit(const Value& x) const override { return make({x}); }
  Value map(const SetFn& f, const Value& t, const ValueSet&) const override {
    std::vector<Value> items;
    for (const Value& v : t.items()) items.push_back(f(v));
    return make(std::move(items));
  }
  Value multiply(const Value& tt) const override {
    std::vector<Value> items;
    for (const Value& inner : tt.items())
      for (const Value& v : inner.items()) items.push_back(v);
    return make(std::move(items));
  }
  ValueSet occurring(const Value& t) const override {
    ValueSet out(t.items().begin(), t.items().end());
    normalize(out);
    return out;
  }
  Value sample(const ValueSet& S, std::mt19937_64& rng) const override {
    std::vector<Value> items;
    if (!S.empty()) {
      int k = std::uniform_int_distribution<int>(0, budget_.max_length)(rng);
      for (int i = 0; i < k; ++i) items.push_back(S[std::uniform_int_distribution<std::size_t>(0, S.size() - 1)(rng)]);
    }
    return make(std::move(items));
  }

 private:
  Value make(std::vector<Value> items) const {
    return commutative_ ? Value::bag(std::move(items)) : Value::list(std::move(items));
  }
  bool commutative_;
};

class TruncationModel : public FreeModel {
 public:
  using FreeModel::FreeModel;
  bool exact() const override { return true; }
  std::optional<std::size_t> predicted_size(std::size_t n) const override { return n == 0 ? 0 : 1; }
  ValueSet carrier(const ValueSet& X) const override {
    if (X.empty()) return {};
    return {Value::unit()};
  }
  Value unit(const Value&) const override { return Value::unit(); }
  Value map(const SetFn&, const Value&, const ValueSet&) const override { return Value::unit(); }
  Value multiply(const Value&) const override { return Value::unit(); }
  ValueSet occurring(const Value&) const override { return {}; }
  Value sample(const ValueSet& S, std::mt19937_64&) const override {
    if (S.empty()) throw std::invalid_argument("empty carrier");
    return Value::unit();
  }
};

bool match(const AlgTerm& pat, const Value& t, std::map<std::string, Value>& env) {
  if (pat.is_var) {
    auto [it, fresh] = env.emplace(pat.name, t);
    return fresh || it->second == t;
  }
  if (t.tag() != Value::Tag::Op) return false;
  std::string name = pat.index.empty() ? pat.name : pat.name + "[" + pat.index + "]";
  if (t.name() != name || t.size() != pat.args.size()) return false;
  for (std::size_t i = 0; i < pat.args.size(); ++i)
    if (!match(pat.args[i], t.item(i), env)) return false;
  return true;
}

Value substitute_generators(const Value& term, const SetFn& f) {
  if (term.tag() == Value::Tag::Inl) return Value::inl(f(term.item(0)));
  std::vector<Value> args;
  for (const Value& a : term.items()) args.push_back(substitute_generators(a, f));
  return Value::op(term.name(), std::move(args));
}

void collect_generators(const Value& term, ValueSet& out) {
  if (term.tag() == Value::Tag::Inl) {
    out.push_back(term.item(0));
    return;
  }
  for (const Value& a : term.items()) collect_generators(a, out);
}

}  // namespace

Value to_value(const AlgTerm& t, const std::map<std::string, Value>& env) {
  if (t.is_var) {
    auto it = env.find(t.name);
    if (it == env.end()) throw std::invalid_argument("unbound variable " + t.name);
    return it->second;
  }
  std::vector<Value> args;
  for (const AlgTerm& a : t.args) args.push_back(to_value(a, env));
  return Value::op(t.index.empty() ? t.name : t.name + "[" + t.index + "]", std::move(args));
}

std::size_t term_nodes(const Value& term) {
  if (term.tag() == Value::Tag::Inl) return 1;
  std::size_t n = 1;
  for (const Value& a : term.items()) n += term_nodes(a);
  return n;
}

CustomModel::CustomModel(Theory th, Budget b) : FreeModel(std::move(th), b) {}

bool CustomModel::exact() const { return theory_.equations.empty(); }

int CustomModel::size_for(const ValueSet& X) const {
  if (budget_.term_size > 0) return budget_.term_size;
  return std::max<int>(1, 2 * static_cast<int>(X.size()) - 1);
}

const CustomModel::Closure& CustomModel::closure(const ValueSet& X) const {
  if (auto it = cache_.find(X); it != cache_.end()) return *it->second;
  auto cl = std::make_unique<Closure>();
  int S = size_for(X);

  // terms by exact node count
  std::vector<std::vector<Value>> by_size(S + 1);
  std::size_t total = 0;
  for (int s = 1; s <= S; ++s) {
    auto& bucket = by_size[s];
    if (s == 1) {
      for (const Value& x : X) bucket.push_back(Value::inl(x));
    }
    for (const auto& [op, arity] : theory_.signature) {
      if (arity == 0) {
        if (s == 1) bucket.push_back(Value::op(op, {}));
        continue;
      }
      std::vector<Value> args(arity);
      std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == arity) {
          if (left == 0) bucket.push_back(Value::op(op, args));
          return;
        }
        int rest = arity - i - 1;
        for (int k = 1; k <= left - rest; ++k)
          for (const Value& c : by_size[k]) {
            args[i] = c;
            rec(i + 1, left - k);
          }
      };
      rec(0, s - 1);
    }
    total += bucket.size();
    if (total > budget_.max_elements)
      throw BudgetExceeded("term enumeration for " + theory_.name + " exceeds " +
                           std::to_string(budget_.max_elements) + " terms");
  }
  for (auto& b : by_size)
    for (Value& v : b) cl->terms.push_back(std::move(v));
  std::sort(cl->terms.begin(), cl->terms.end());
  for (std::size_t i = 0; i < cl->terms.size(); ++i) cl->index.emplace(cl->terms[i], i);

  std::vector<std::size_t> parent(cl->terms.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  };

  // equation instances whose both sides fit the size budget
  for (const Equation& eq : theory_.equations) {
    for (int dir = 0; dir < 2; ++dir) {
      const AlgTerm& from = dir == 0 ? eq.lhs : eq.rhs;
      const AlgTerm& to = dir == 0 ? eq.rhs : eq.lhs;
      std::vector<std::string> extra;
      for (const std::string& v : syntax::free_vars(to))
        if (!syntax::free_vars(from).count(v)) extra.push_back(v);
      for (std::size_t i = 0; i < cl->terms.size(); ++i) {
        std::map<std::string, Value> env;
        if (!match(from, cl->terms[i], env)) continue;
        std::function<void(std::size_t)> assign = [&](std::size_t k) {
          if (k == extra.size()) {
            Value rhs = to_value(to, env);
            if (auto it = cl->index.find(rhs); it != cl->index.end()) unite(i, it->second);
            return;
          }
          for (const Value& t : cl->terms) {
            env[extra[k]] = t;
            assign(k + 1);
          }
          env.erase(extra[k]);
        };
        assign(0);
      }
    }
  }

  // congruence
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::string, std::vector<std::size_t>>, std::size_t> sig;
    for (std::size_t i = 0; i < cl->terms.size(); ++i) {
      const Value& t = cl->terms[i];
      if (t.tag() != Value::Tag::Op || t.size() == 0) continue;
      std::vector<std::size_t> roots;
      for (const Value& a : t.items()) roots.push_back(find(cl->index.at(a)));
      auto [it, fresh] = sig.emplace(std::make_pair(t.name(), std::move(roots)), i);
      if (!fresh && unite(it->second, i)) changed = true;
    }
  }

  // roots are the least index in each class, and terms are sorted
  cl->rep.resize(cl->terms.size());
  for (std::size_t i = 0; i < cl->terms.size(); ++i) {
    cl->rep[i] = find(i);
    if (cl->rep[i] == i) cl->classes.push_back(cl->terms[i]);
  }
  auto& slot = cache_[X];
  slot = std::move(cl);
  return *slot;
}

ValueSet CustomModel::carrier(const ValueSet& X) const { return closure(X).classes; }

std::size_t CustomModel::term_count(const ValueSet& X) const { return closure(X).terms.size(); }

std::optional<Value> CustomModel::representative(const Value& term, const ValueSet& X) const {
  const Closure& cl = closure(X);
  auto it = cl.index.find(term);
  if (it == cl.index.end()) return std::nullopt;
  return cl.terms[cl.rep[it->second]];
}

Value CustomModel::unit(const Value& x) const { return Value::inl(x); }

Value CustomModel::map(const SetFn& f, const Value& t, const ValueSet& Y) const {
  Value image = substitute_generators(t, f);
  auto rep = representative(image, Y);
  if (!rep) throw BudgetExceeded("image term " + image.str() + " is outside the term budget");
  return *rep;
}

ValueSet CustomModel::occurring(const Value& t) const {
  ValueSet out;
  collect_generators(t, out);
  normalize(out);
  return out;
}

Verdict CustomModel::equal(const Value& a, const Value& b, const ValueSet& X) const {
  auto ra = representative(a, X);
  auto rb = representative(b, X);
  if (ra && rb && *ra == *rb) return Verdict::Equal;
  if (theory_.equations.empty()) return Verdict::Apart;
  if (!has_drop_equations(theory_) && occurring(a) != occurring(b)) return Verdict::Apart;
  return Verdict::Unknown;
}

std::unique_ptr<FreeModel> make_free_model(const Theory& th, const Budget& b) {
  switch (th.builtin) {
    case Builtin::Semilattice: return std::make_unique<SemilatticeModel>(th, b);
    case Builtin::Convex: return std::make_unique<ConvexModel>(th, b);
    case Builtin::Monoid: return std::make_unique<WordModel>(th, b, false);
    case Builtin::CommutativeMonoid: return std::make_unique<WordModel>(th, b, true);
    case Builtin::Truncation: return std::make_unique<TruncationModel>(th, b);
    case Builtin::Custom: break;
  }
  return std::make_unique<CustomModel>(th, b);
}

std::vector<ValueSet> minimal_supports_brute(const FreeModel& m, const Value& t, const ValueSet& X) {
  std::size_t n = X.size();
  std::vector<std::size_t> hits;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    ValueSet sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(X[i]);
    if (m.contains(t, sub, X)) hits.push_back(mask);
  }
  std::vector<ValueSet> out;
  for (std::size_t a : hits) {
    bool minimal = std::none_of(hits.begin(), hits.end(), [&](std::size_t b) { return b != a && (b & a) == b; });
    if (!minimal) continue;
    ValueSet sub;
    for (std::size_t i = 0; i < n; ++i)
      if (a >> i & 1) sub.push_back(X[i]);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ValueSet> least_support(const FreeModel& m, const Value& t, const ValueSet& X) {
  ValueSet cand = m.occurring(t);
  bool verified = m.contains(t, cand, X);
  for (std::size_t i = 0; verified && i < cand.size(); ++i) {
    ValueSet smaller = cand;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    if (m.contains(t, smaller, X)) verified = false;
  }
  if (verified && m.exact()) return cand;
  auto all = minimal_supports_brute(m, t, X);
  if (all.size() == 1) return all.front();
  return std::nullopt;
}

ValueSet minimal_support(const FreeModel& m, const Value& t, const ValueSet& X) {
  auto s = least_support(m, t, X);
  if (!s) throw NoLeastSupport("element " + t.str() + " of " + m.theory().name + " has no least support");
  return *s;
}

}  // namespace clott::theories
