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

#include "clott/coalgebra/coalgebra.hpp"

#include "clott/core/errors.hpp"
#include "clott/model/presheaf.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace clott::coalgebra {

namespace {

using K = FunctorExpr::Kind;

std::size_t index_in(const ValueSet& s, const Value& v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) throw std::logic_error("element " + v.str() + " is not in the expected stage");
  return static_cast<std::size_t>(it - s.begin());
}

SetFn as_setfn(const ValueSet& dom, const FinFn& m, const ValueSet& cod) {
  return [&dom, &m, &cod](const Value& v) { return cod[m[index_in(dom, v)]]; };
}

FinFn lift(const Functor& f, const ValueSet& dom, const FinFn& m, const ValueSet& cod, const ValueSet& fdom,
           const ValueSet& fcod) {
  SetFn g = as_setfn(dom, m, cod);
  FinFn out(fdom.size());
  for (std::size_t i = 0; i < fdom.size(); ++i) out[i] = index_in(fcod, functor_map(f, g, fdom[i]));
  return out;
}

bool bijective(const FinFn& m, std::size_t cod) {
  if (m.size() != cod) return false;
  std::vector<bool> hit(cod, false);
  for (std::size_t v : m) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::string atom_text(const Value& v) { return v.tag() == Value::Tag::Sym ? v.name() : v.str(); }

}  // namespace

ValueSet Coalgebra::states() const { return theories::standard_set(structure.size()); }

std::vector<std::size_t> TerminalSeq::sizes() const {
  std::vector<std::size_t> out;
  for (const ValueSet& s : stages) out.push_back(s.size());
  return out;
}

TerminalSeq terminal_sequence(const Functor& f, std::size_t max_steps, std::size_t max_elements) {
  if (max_steps < 1) throw std::invalid_argument("terminal sequence needs at least one step");
  TerminalSeq seq;
  seq.functor = f;
  seq.stages.push_back({Value::unit()});
  for (std::size_t k = 0; k < max_steps; ++k) {
    const ValueSet& last = seq.stages.back();
    auto predicted = functor_size(f, last.size());
    if (predicted && *predicted > max_elements) {
      seq.budget_stop = true;
      seq.stop_reason = "stage " + std::to_string(k + 1) + " would have " +
                        (*predicted >= (std::size_t{1} << 62) ? std::string("at least 2^62") : std::to_string(*predicted)) +
                        " elements, over the budget of " + std::to_string(max_elements);
      break;
    }
    ValueSet next;
    try {
      next = functor_eval(f, last, max_elements);
    } catch (const BudgetExceeded& e) {
      seq.budget_stop = true;
      seq.stop_reason = e.what();
      break;
    }
    FinFn c;
    if (k == 0) {
      c.assign(next.size(), 0);
    } else {
      c = lift(f, seq.stages[k], seq.connectors[k - 1], seq.stages[k - 1], next, last);
    }
    seq.stages.push_back(std::move(next));
    seq.connectors.push_back(std::move(c));
    if (bijective(seq.connectors.back(), seq.stages[k].size())) {
      seq.convergence = k;
      break;
    }
  }
  return seq;
}

FinFn connector_between(const TerminalSeq& seq, std::size_t k, std::size_t j) {
  if (j > k || k >= seq.stages.size()) throw std::out_of_range("connector outside the computed stages");
  FinFn m(seq.stages[k].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::size_t v = i;
    for (std::size_t s = k; s > j; --s) v = seq.connectors[s - 1][v];
    m[i] = v;
  }
  return m;
}

FinFn direct_connector(const TerminalSeq& seq, std::size_t k, std::size_t j) {
  if (j > k || k >= seq.stages.size()) throw std::out_of_range("connector outside the computed stages");
  FinFn m(seq.stages[k - j].size(), 0);
  for (std::size_t i = 1; i <= j; ++i)
    m = lift(seq.functor, seq.stages[k - j + i - 1], m, seq.stages[i - 1], seq.stages[k - j + i], seq.stages[i]);
  return m;
}

std::size_t count_morphisms(const Coalgebra& c, const FinalCoalgebra& fin) {
  const std::size_t n = c.size(), m = fin.carrier.size();
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<std::size_t> h(n, 0);
  std::size_t count = 0;
  SetFn hf = [&](const Value& v) { return fin.carrier[h[static_cast<std::size_t>(v.as_int())]]; };
  while (true) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y)
      ok = fin.structure[h[y]] == functor_map(c.functor, hf, c.structure[y]);
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && ++h[i] == m) h[i++] = 0;
    if (i == n) break;
  }
  return count;
}

FinalCoalgebra final_coalgebra(const Functor& f, std::size_t max_steps, std::size_t finality_bound,
                               std::size_t max_coalgebras) {
  TerminalSeq seq = terminal_sequence(f, max_steps);
  if (!seq.convergence) {
    std::string sizes;
    for (std::size_t s : seq.sizes()) sizes += (sizes.empty() ? "" : ", ") + std::to_string(s);
    throw NotConverged("terminal sequence of " + print(f) + " did not converge within " + std::to_string(max_steps) +
                       " steps (stage sizes " + sizes + ")");
  }
  FinalCoalgebra fin;
  fin.step = *seq.convergence;
  fin.carrier = seq.stages[fin.step];
  fin.structure.resize(fin.carrier.size());
  const FinFn& c = seq.connectors[fin.step];
  for (std::size_t i = 0; i < c.size(); ++i) fin.structure[c[i]] = seq.stages[fin.step + 1][i];
  fin.bound = finality_bound;

  for (std::size_t n = 0; n <= finality_bound && fin.finality_ok; ++n) {
    Coalgebra y{f, std::vector<Value>(n)};
    ValueSet fy = functor_eval(f, y.states());
    if (n > 0 && fy.empty()) continue;
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      if (fin.coalgebras_checked == max_coalgebras) {
        fin.finality_complete = false;
        return fin;
      }
      for (std::size_t i = 0; i < n; ++i) y.structure[i] = fy[pick[i]];
      ++fin.coalgebras_checked;
      std::size_t k = count_morphisms(y, fin);
      if (k != 1) {
        fin.finality_ok = false;
        fin.failure = std::to_string(k) + " morphisms from the coalgebra\n" + print(y);
        break;
      }
      std::size_t i = 0;
      while (i < n && ++pick[i] == fy.size()) pick[i++] = 0;
      if (i == n) break;
    }
  }
  return fin;
}

std::vector<std::size_t> class_of(const Partition& p, std::size_t n) {
  std::vector<std::size_t> out(n, 0);
  for (std::size_t b = 0; b < p.size(); ++b)
    for (std::size_t x : p[b]) out[x] = b;
  return out;
}

namespace {

Partition from_classes(const std::vector<std::size_t>& cls) {
  Partition p;
  std::map<std::size_t, std::size_t> block;
  for (std::size_t x = 0; x < cls.size(); ++x) {
    auto [it, fresh] = block.emplace(cls[x], p.size());
    if (fresh) p.emplace_back();
    p[it->second].push_back(x);
  }
  return p;
}

}  // namespace

Partition bisimilarity(const Coalgebra& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> cls(n, 0);
  std::size_t count = n == 0 ? 0 : 1;
  while (true) {
    SetFn to_class = [&](const Value& v) { return Value::integer(static_cast<std::int64_t>(cls[v.as_int()])); };
    std::map<std::pair<std::size_t, Value>, std::size_t> sig;
    std::vector<std::size_t> next(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto key = std::make_pair(cls[x], functor_map(c.functor, to_class, c.structure[x]));
      next[x] = sig.emplace(std::move(key), sig.size()).first->second;
    }
    if (sig.size() == count) break;
    count = sig.size();
    cls = std::move(next);
  }
  return from_classes(cls);
}

namespace {

struct PfView {
  std::vector<std::vector<std::pair<Value, std::size_t>>> succ;
};

PfView pf_view(const Coalgebra& c) {
  const FunctorExpr& f = *c.functor;
  bool labelled = false;
  if (f.kind == K::Monad && f.monad == theories::Builtin::Semilattice) {
    const FunctorExpr& a = *f.args[0];
    if (a.kind == K::Prod && a.args[0]->kind == K::Const && a.args[1]->kind == K::Id) labelled = true;
    else if (a.kind != K::Id) throw std::invalid_argument("expected pf(id) or pf(prod(const{..}, id))");
  } else {
    throw std::invalid_argument("expected pf(id) or pf(prod(const{..}, id))");
  }
  PfView v;
  for (const Value& s : c.structure) {
    auto& out = v.succ.emplace_back();
    for (const Value& e : s.items()) {
      if (labelled) out.emplace_back(e.item(0), static_cast<std::size_t>(e.item(1).as_int()));
      else out.emplace_back(Value::unit(), static_cast<std::size_t>(e.as_int()));
    }
  }
  return v;
}

using Rel = std::vector<std::vector<bool>>;

bool transfer(const PfView& v, const Rel& r, std::size_t x, std::size_t y) {
  for (const auto& [a, x2] : v.succ[x]) {
    bool found = false;
    for (const auto& [b, y2] : v.succ[y])
      if (a == b && r[x2][y2]) found = true;
    if (!found) return false;
  }
  return true;
}

bool pair_ok(const PfView& v, const Rel& r, std::size_t x, std::size_t y) {
  return transfer(v, r, x, y) && transfer(v, r, y, x);
}

Partition rel_to_partition(const Rel& r) {
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!r[x][x]) throw std::logic_error("largest bisimulation is not reflexive");
    for (std::size_t y = 0; y < n; ++y) {
      if (r[x][y] != r[y][x]) throw std::logic_error("largest bisimulation is not symmetric");
      for (std::size_t z = 0; z < n; ++z)
        if (r[x][y] && r[y][z] && !r[x][z]) throw std::logic_error("largest bisimulation is not transitive");
    }
  }
  std::vector<std::size_t> cls(n);
  for (std::size_t x = 0; x < n; ++x) {
    cls[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (r[x][y]) {
        cls[x] = cls[y];
        break;
      }
  }
  return from_classes(cls);
}

}  // namespace

Partition brute_force_bisimulation_pf(const Coalgebra& c, bool enumerate_relations) {
  PfView v = pf_view(c);
  const std::size_t n = c.size();
  Rel best(n, std::vector<bool>(n, false));
  if (enumerate_relations) {
    if (n > 4) throw std::invalid_argument("relation enumeration is limited to 4 states");
    const std::size_t cells = n * n;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
      Rel r(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < cells; ++i) r[i / n][i % n] = (bits >> i & 1u) != 0;
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y)
          if (r[x][y]) ok = pair_ok(v, r, x, y);
      if (!ok) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r[x][y]) best[x][y] = true;
    }
  } else {
    best.assign(n, std::vector<bool>(n, true));
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (best[x][y] && !pair_ok(v, best, x, y)) {
            best[x][y] = false;
            changed = true;
          }
    }
  }
  return rel_to_partition(best);
}

Partition brute_force_bisimulation_prob(const Coalgebra& c) {
  const FunctorExpr& f = *c.functor;
  bool labelled = f.kind == K::Prod && f.args[0]->kind == K::Const;
  const FunctorExpr& d = labelled ? *f.args[1] : f;
  if (d.kind != K::Monad || d.monad != theories::Builtin::Convex || d.args[0]->kind != K::Id)
    throw std::invalid_argument("expected df(id) or prod(const{..}, df(id))");
  const std::size_t n = c.size();
  if (n > 8) throw std::invalid_argument("partition enumeration is limited to 8 states");
  std::vector<Value> label(n);
  std::vector<std::vector<Rational>> mass(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t x = 0; x < n; ++x) {
    const Value& s = c.structure[x];
    const Value& dist = labelled ? s.item(1) : s;
    if (labelled) label[x] = s.item(0);
    auto w = dist.weights();
    for (std::size_t i = 0; i < dist.size(); ++i) mass[x][static_cast<std::size_t>(dist.item(i).as_int())] += w[i];
  }
  auto is_bisim = [&](const std::vector<std::size_t>& cls, std::size_t blocks) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        if (cls[x] != cls[y]) continue;
        if (label[x] != label[y]) return false;
        std::vector<Rational> mx(blocks, Rational(0)), my(blocks, Rational(0));
        for (std::size_t z = 0; z < n; ++z) {
          mx[cls[z]] += mass[x][z];
          my[cls[z]] += mass[y][z];
        }
        if (mx != my) return false;
      }
    return true;
  };
  std::vector<std::size_t> cls(n, 0), best;
  std::size_t best_blocks = SIZE_MAX;
  if (n == 0) return {};
  // restricted growth strings enumerate each set partition once
  while (true) {
    std::size_t blocks = *std::max_element(cls.begin(), cls.end()) + 1;
    if (blocks < best_blocks && is_bisim(cls, blocks)) {
      best = cls;
      best_blocks = blocks;
    }
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t mx = *std::max_element(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(i));
      if (cls[i] <= mx) {
        ++cls[i];
        break;
      }
      cls[i] = 0;
      --i;
    }
    if (i == 0) break;
    std::fill(cls.begin() + static_cast<std::ptrdiff_t>(i) + 1, cls.end(), 0);
  }
  return from_classes(best);
}

Coalgebra pf_coalgebra_from_code(const ValueSet& labels, std::size_t n, std::uint64_t code) {
  Functor f = f_monad(theories::Builtin::Semilattice, f_prod(f_const(labels), f_id()));
  Coalgebra c{f, {}};
  const std::size_t a = labels.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Value> items;
    for (std::size_t l = 0; l < a; ++l)
      for (std::size_t t = 0; t < n; ++t)
        if (code >> ((s * a + l) * n + t) & 1u)
          items.push_back(Value::tuple({labels[l], Value::integer(static_cast<std::int64_t>(t))}));
    c.structure.push_back(Value::set(std::move(items)));
  }
  return c;
}

Coalgebra random_prob_coalgebra(std::size_t n, const ValueSet& labels, int den, std::mt19937_64& rng) {
  theories::Budget b;
  b.denominator = den;
  Functor f = f_prod(f_const(labels), f_monad(theories::Builtin::Convex, f_id(), b));
  Coalgebra c{f, {}};
  auto pick = [&](std::size_t k) { return std::uniform_int_distribution<std::size_t>(0, k - 1)(rng); };
  for (std::size_t s = 0; s < n; ++s) {
    if (s > 0 && pick(3) == 0) {
      c.structure.push_back(c.structure[pick(s)]);
      continue;
    }
    const std::int64_t d = static_cast<std::int64_t>(pick(static_cast<std::size_t>(den))) + 1;
    std::vector<std::int64_t> units(n, 0);
    for (std::int64_t u = 0; u < d; ++u) ++units[pick(n)];
    std::vector<std::pair<Value, Rational>> w;
    for (std::size_t t = 0; t < n; ++t)
      if (units[t] > 0) w.emplace_back(Value::integer(static_cast<std::int64_t>(t)), Rational(units[t], d));
    c.structure.push_back(Value::tuple({labels[pick(labels.size())], Value::dist(std::move(w))}));
  }
  return c;
}

StageLawResult check_stage_law(const Functor& f, int bound) {
  auto slice = std::make_shared<const model::Category>(model::Base::Clock, 1, bound, 1);
  model::FinPresheaf mu = model::guarded_fixpoint(f, slice);
  TerminalSeq seq = terminal_sequence(f, static_cast<std::size_t>(bound));
  StageLawResult res;
  std::vector<std::map<Value, Value>> memo(static_cast<std::size_t>(bound));
  std::function<Value(int, const Value&)> tr = [&](int k, const Value& v) {
    auto& m = memo[static_cast<std::size_t>(k)];
    if (auto it = m.find(v); it != m.end()) return it->second;
    SetFn g = [&](const Value& w) { return k == 0 ? Value::unit() : tr(k - 1, w.item(w.size() - 1)); };
    Value out = functor_map(f, g, v);
    m.emplace(v, out);
    return out;
  };
  for (int k = 0; k < bound; ++k) {
    StageLawRow row;
    row.stage = k;
    std::size_t obj = SIZE_MAX;
    for (std::size_t o = 0; o < slice->objects().size(); ++o)
      if (slice->objects()[o].theta[0] == k) obj = o;
    const ValueSet& fiber = mu.fiber(obj);
    row.fiber_size = fiber.size();
    if (static_cast<std::size_t>(k) + 1 < seq.stages.size()) {
      const ValueSet& target = seq.stages[static_cast<std::size_t>(k) + 1];
      row.terminal_size = target.size();
      ValueSet image;
      for (const Value& v : fiber) image.push_back(tr(k, v));
      std::sort(image.begin(), image.end());
      bool distinct = std::adjacent_find(image.begin(), image.end()) == image.end();
      row.bijective = distinct && image == target;
    } else if (seq.convergence) {
      const ValueSet& target = seq.stages.back();
      row.terminal_size = target.size();
      row.bijective = fiber.size() == target.size();
    }
    res.ok = res.ok && row.bijective;
    res.rows.push_back(row);
  }
  return res;
}

Coalgebra parse_coalgebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  Functor f;
  std::optional<std::size_t> n;
  std::map<std::size_t, Value> labels;
  std::map<std::size_t, std::vector<std::pair<std::optional<Value>, std::size_t>>> edges;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> probs;
  auto state = [&](const std::string& tok) {
    std::size_t s = 0;
    try {
      s = std::stoul(tok);
    } catch (const std::exception&) {
      throw ParseError("expected a state number, got '" + tok + "'", lineno, 1);
    }
    if (!n) throw ParseError("'states' must come before transitions", lineno, 1);
    if (s >= *n) throw ParseError("state " + tok + " out of range", lineno, 1);
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find("--"); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "functor") {
      auto at = line.find("functor") + 7;
      try {
        f = parse_functor(line.substr(at));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno, 1);
      }
    } else if (tok[0] == "states" && tok.size() == 2) {
      try {
        n = std::stoul(tok[1]);
      } catch (const std::exception&) {
        throw ParseError("expected a state count", lineno, 1);
      }
    } else if (tok[0] == "edge" && tok.size() == 3) {
      edges[state(tok[1])].emplace_back(std::nullopt, state(tok[2]));
    } else if (tok[0] == "edge" && tok.size() == 4) {
      edges[state(tok[1])].emplace_back(parse_atom(tok[2]), state(tok[3]));
    } else if (tok[0] == "label" && tok.size() == 3) {
      labels[state(tok[1])] = parse_atom(tok[2]);
    } else if (tok[0] == "prob" && tok.size() == 4) {
      Rational p;
      try {
        p = parse_rational(tok[3]);
      } catch (const std::exception&) {
        throw ParseError("bad probability '" + tok[3] + "'", lineno, 1);
      }
      probs[state(tok[1])].emplace_back(state(tok[2]), p);
    } else {
      throw ParseError("unrecognised line '" + line + "'", lineno, 1);
    }
  }
  if (!f) throw ParseError("missing 'functor' line", lineno, 1);
  if (!n) throw ParseError("missing 'states' line", lineno, 1);

  auto in_const = [](const FunctorExpr& c, const Value& v) {
    return std::binary_search(c.constant.begin(), c.constant.end(), v);
  };
  std::function<Value(const FunctorExpr&, std::size_t)> build = [&](const FunctorExpr& g, std::size_t s) -> Value {
    auto st = [](std::size_t t) { return Value::integer(static_cast<std::int64_t>(t)); };
    switch (g.kind) {
      case K::Const: {
        auto it = labels.find(s);
        if (it == labels.end()) throw ParseError("state " + std::to_string(s) + " has no label", 0, 0);
        if (!in_const(g, it->second))
          throw ParseError("label " + it->second.str() + " of state " + std::to_string(s) + " is not in the constant",
                           0, 0);
        return it->second;
      }
      case K::Id: {
        const auto& e = edges[s];
        if (e.size() != 1 || e[0].first)
          throw ParseError("state " + std::to_string(s) + " needs exactly one unlabelled edge", 0, 0);
        return st(e[0].second);
      }
      case K::Prod: return Value::tuple({build(*g.args[0], s), build(*g.args[1], s)});
      case K::Sum: break;
      case K::Monad: {
        const FunctorExpr& a = *g.args[0];
        if (g.monad == theories::Builtin::Semilattice) {
          bool lab = a.kind == K::Prod && a.args[0]->kind == K::Const && a.args[1]->kind == K::Id;
          if (!lab && a.kind != K::Id) break;
          std::vector<Value> items;
          for (const auto& [l, t] : edges[s]) {
            if (lab != l.has_value()) throw ParseError("edge labels do not match the functor", 0, 0);
            if (lab && !in_const(*a.args[0], *l)) throw ParseError("edge label " + l->str() + " is not allowed", 0, 0);
            items.push_back(lab ? Value::tuple({*l, st(t)}) : st(t));
          }
          return Value::set(std::move(items));
        }
        if (g.monad == theories::Builtin::Convex && a.kind == K::Id) {
          std::vector<std::pair<Value, Rational>> w;
          Rational total(0);
          for (const auto& [t, p] : probs[s]) {
            w.emplace_back(st(t), p);
            total += p;
          }
          if (total != Rational(1))
            throw ParseError("probabilities of state " + std::to_string(s) + " sum to " + to_string(total), 0, 0);
          return Value::dist(std::move(w));
        }
        break;
      }
    }
    throw ParseError("edge lists do not cover the functor " + print(f), 0, 0);
  };
  Coalgebra c{f, {}};
  for (std::size_t s = 0; s < *n; ++s) c.structure.push_back(build(*f, s));
  return c;
}

Coalgebra load_coalgebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_coalgebra(ss.str());
}

std::string print(const Coalgebra& c) {
  std::ostringstream out;
  out << "functor " << print(c.functor) << "\nstates " << c.size() << "\n";
  std::function<void(const FunctorExpr&, std::size_t, const Value&)> emit = [&](const FunctorExpr& g, std::size_t s,
                                                                                const Value& v) {
    switch (g.kind) {
      case K::Const: out << "label " << s << " " << atom_text(v) << "\n"; return;
      case K::Id: out << "edge " << s << " " << v.as_int() << "\n"; return;
      case K::Prod:
        emit(*g.args[0], s, v.item(0));
        emit(*g.args[1], s, v.item(1));
        return;
      case K::Monad:
        if (g.monad == theories::Builtin::Semilattice) {
          for (const Value& e : v.items()) {
            if (e.tag() == Value::Tag::Tuple) out << "edge " << s << " " << atom_text(e.item(0)) << " " << e.item(1).as_int() << "\n";
            else out << "edge " << s << " " << e.as_int() << "\n";
          }
          return;
        }
        if (g.monad == theories::Builtin::Convex) {
          auto w = v.weights();
          for (std::size_t i = 0; i < v.size(); ++i) out << "prob " << s << " " << v.item(i).as_int() << " " << to_string(w[i]) << "\n";
          return;
        }
        break;
      case K::Sum: break;
    }
    out << "-- state " << s << " = " << v.str() << "\n";
  };
  for (std::size_t s = 0; s < c.size(); ++s) emit(*c.functor, s, c.structure[s]);
  return out.str();
}

std::string Delay::str() const {
  std::string head = steps == 0 ? "" : steps == 1 ? "step " : "step^" + std::to_string(steps) + " ";
  return head + (value ? "now " + atom_text(*value) : std::string("never"));
}

Delay parse_delay(std::string_view text, std::size_t bound) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tok;
  for (std::string w; in >> w;) tok.push_back(w);
  std::size_t steps = 0, i = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] == "step") {
      ++steps;
    } else if (tok[i].rfind("step^", 0) == 0) {
      try {
        steps += std::stoul(tok[i].substr(5));
      } catch (const std::exception&) {
        throw ParseError("bad step count in '" + tok[i] + "'", 1, 1);
      }
    } else {
      break;
    }
  }
  if (i + 1 == tok.size() && tok[i] == "never") return Delay::never(steps + bound + 1);
  if (i + 2 == tok.size() && tok[i] == "now") return Delay{steps, parse_atom(tok[i + 1])};
  throw ParseError("expected [step|step^k]* (now a | never) in '" + std::string(text) + "'", 1, 1);
}

Delay restrict(const Delay& d, std::size_t k) {
  if (d.value && d.steps <= k) return d;
  return Delay::never(k + 1);
}

namespace {

bool now_clause(const Value& a, const Delay& y, std::size_t stage, std::size_t bound, const ValueSet& X,
                const Relation& r, bool flipped) {
  for (std::size_t n = 0; n <= bound; ++n)
    for (const Value& y2 : X)
      if (restrict(Delay{n, y2}, stage) == y && (flipped ? r(y2, a) : r(a, y2))) return true;
  return false;
}

}  // namespace

bool weak_bisim_at(const Delay& x, const Delay& y, std::size_t stage, std::size_t bound, const ValueSet& X,
                   const Relation& r) {
  Delay xs = restrict(x, stage), ys = restrict(y, stage);
  if (xs.value && xs.steps == 0) return now_clause(*xs.value, ys, stage, bound, X, r, false);
  if (ys.value && ys.steps == 0) return now_clause(*ys.value, xs, stage, bound, X, r, true);
  if (stage == 0) return true;
  return weak_bisim_at(Delay{xs.steps - 1, xs.value}, Delay{ys.steps - 1, ys.value}, stage - 1, bound, X, r);
}

WeakBisimResult weak_bisim_delay(const Delay& x, const Delay& y, std::size_t bound, const ValueSet& X,
                                 const Relation& r) {
  WeakBisimResult res;
  for (std::size_t k = 0; k < bound; ++k) {
    bool v = weak_bisim_at(x, y, k, bound, X, r);
    res.stages.push_back(v);
    res.all_stages = res.all_stages && v;
  }
  return res;
}

}  // namespace clott::coalgebra
