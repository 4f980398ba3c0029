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

#include "clott/theories/checks.hpp"

#include "clott/core/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace clott::theories {

std::vector<FinMap> all_maps(std::size_t n, std::size_t m) {
  std::vector<FinMap> out;
  if (n > 0 && m == 0) return out;
  FinMap cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < m) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

std::vector<FinMap> all_injections(std::size_t n, std::size_t m) {
  std::vector<FinMap> out;
  for (FinMap& f : all_maps(n, m))
    if (std::set<std::size_t>(f.begin(), f.end()).size() == n) out.push_back(std::move(f));
  return out;
}

namespace {

SetFn as_fn(const FinMap& f, const ValueSet& dom, const ValueSet& cod) {
  std::map<Value, Value> table;
  for (std::size_t i = 0; i < f.size(); ++i) table.emplace(dom[i], cod[f[i]]);
  return [table = std::move(table)](const Value& v) { return table.at(v); };
}

std::vector<std::size_t> indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::string show(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

MonoReport check_preserves_monos(const FreeModel& m, std::size_t bound) {
  MonoReport r;
  r.bound = bound;
  r.exact = m.exact();
  for (std::size_t b = 0; b <= bound; ++b) {
    ValueSet B = standard_set(b);
    for (std::size_t a = 0; a <= b; ++a) {
      ValueSet A = standard_set(a);
      ValueSet TA = m.carrier(A);
      for (const FinMap& i : all_injections(a, b)) {
        ++r.injections_checked;
        SetFn fi = as_fn(i, A, B);
        std::map<Value, Value> seen;
        for (const Value& t : TA) {
          Value img = m.map(fi, t, B);
          auto [it, fresh] = seen.emplace(img, t);
          if (!fresh) {
            r.ok = false;
            r.counterexample = MonoCounterexample{a, b, i, it->second, t};
            return r;
          }
        }
      }
    }
  }
  return r;
}

PullbackSquare pullback_square(const FreeModel& m, std::size_t x_size, std::size_t y_size, const FinMap& f,
                               const std::vector<std::size_t>& z) {
  PullbackSquare sq;
  sq.x_size = x_size;
  sq.y_size = y_size;
  sq.f = f;
  sq.z = z;
  ValueSet X = standard_set(x_size), Y = standard_set(y_size);
  ValueSet Z;
  for (std::size_t v : z) Z.push_back(Y[v]);
  ValueSet P;
  for (std::size_t i = 0; i < x_size; ++i)
    if (std::find(z.begin(), z.end(), f[i]) != z.end()) {
      sq.p.push_back(i);
      P.push_back(X[i]);
    }
  SetFn fx = as_fn(f, X, Y);
  SetFn id = [](const Value& v) { return v; };

  // T(X) x_T(Y) T(Z)
  std::multimap<Value, Value> by_image;
  for (const Value& s : m.carrier(Z)) by_image.emplace(m.map(id, s, Y), s);
  std::set<std::pair<Value, Value>> pullback;
  for (const Value& t : m.carrier(X)) {
    Value img = m.map(fx, t, Y);
    auto [lo, hi] = by_image.equal_range(img);
    for (auto it = lo; it != hi; ++it) pullback.emplace(t, it->second);
  }
  sq.pullback_size = pullback.size();

  std::set<std::pair<Value, Value>> image;
  ValueSet TP = m.carrier(P);
  sq.tp_size = TP.size();
  for (const Value& t : TP) {
    auto pair = std::make_pair(m.map(id, t, X), m.map(fx, t, Y));
    if (!pullback.count(pair)) throw std::logic_error("comparison map leaves the pullback");
    if (!image.insert(pair).second) sq.injective = false;
  }
  sq.surjective = image.size() == pullback.size();
  return sq;
}

PullbackReport check_preserves_pullbacks_of_monos(const FreeModel& m, std::size_t bound) {
  PullbackReport r;
  r.bound = bound;
  r.exact = m.exact();
  for (std::size_t ys = 0; ys <= bound; ++ys)
    for (std::size_t xs = 0; xs <= bound; ++xs)
      for (const FinMap& f : all_maps(xs, ys))
        for (std::size_t mask = 0; mask < (std::size_t(1) << ys); ++mask) {
          std::vector<std::size_t> z;
          for (std::size_t i = 0; i < ys; ++i)
            if (mask >> i & 1) z.push_back(i);
          ++r.squares_checked;
          PullbackSquare sq = pullback_square(m, xs, ys, f, z);
          if (!sq.injective || !sq.surjective) {
            r.ok = false;
            r.counterexample = std::move(sq);
            return r;
          }
        }
  return r;
}

bool is_disjoint_points_square(const PullbackSquare& sq) {
  return sq.x_size == 1 && sq.y_size == 2 && sq.z.size() == 1 && sq.p.empty() && sq.f[0] != sq.z[0];
}

std::string PullbackSquare::describe() const {
  std::ostringstream os;
  os << "X=" << show(indices(x_size)) << " Y=" << show(indices(y_size))
     << " f=" << show(f) << " Z=" << show(z) << " P=" << show(p) << " |T(P)|=" << tp_size
     << " |pullback|=" << pullback_size << (injective ? "" : " not-injective")
     << (surjective ? "" : " not-surjective");
  return os.str();
}

LawReport check_functor_laws(const FreeModel& m, std::size_t bound) {
  LawReport r;
  r.bound = bound;
  SetFn id = [](const Value& v) { return v; };
  for (std::size_t n = 0; n <= bound; ++n) {
    ValueSet X = standard_set(n);
    for (const Value& t : m.carrier(X)) {
      ++r.instances;
      if (m.map(id, t, X) != t) {
        r.ok = false;
        r.failure = "T(id) moves " + t.str();
        return r;
      }
    }
  }
  for (std::size_t a = 0; a <= bound; ++a)
    for (std::size_t b = 0; b <= bound; ++b)
      for (std::size_t c = 0; c <= bound; ++c) {
        ValueSet A = standard_set(a), B = standard_set(b), C = standard_set(c);
        ValueSet TA = m.carrier(A);
        for (const FinMap& f : all_maps(a, b))
          for (const FinMap& g : all_maps(b, c)) {
            FinMap gf(a);
            for (std::size_t i = 0; i < a; ++i) gf[i] = g[f[i]];
            SetFn F = as_fn(f, A, B), G = as_fn(g, B, C), GF = as_fn(gf, A, C);
            for (const Value& t : TA) {
              ++r.instances;
              if (m.map(GF, t, C) != m.map(G, m.map(F, t, B), C)) {
                r.ok = false;
                r.failure = "T(g.f) differs from T(g).T(f) at " + t.str();
                return r;
              }
            }
          }
      }
  return r;
}

LawReport check_monad_laws(const FreeModel& m, std::size_t bound, std::size_t samples, std::uint64_t seed) {
  LawReport r;
  r.bound = bound;
  std::mt19937_64 rng(seed);
  SetFn eta = [&](const Value& v) { return m.unit(v); };
  SetFn mu = [&](const Value& v) { return m.multiply(v); };
  for (std::size_t n = 0; n <= bound; ++n) {
    ValueSet X = standard_set(n);
    ValueSet TX = m.carrier(X);
    for (const Value& t : TX) {
      r.instances += 2;
      if (m.multiply(m.unit(t)) != t) {
        r.ok = false;
        r.failure = "left unit fails at " + t.str();
        return r;
      }
      if (m.multiply(m.map(eta, t, {})) != t) {
        r.ok = false;
        r.failure = "right unit fails at " + t.str();
        return r;
      }
    }
    if (TX.empty()) continue;
    // naturality of the unit
    for (std::size_t k = 0; k <= bound; ++k)
      for (const FinMap& f : all_maps(n, k)) {
        ValueSet Y = standard_set(k);
        SetFn F = as_fn(f, X, Y);
        for (const Value& x : X) {
          ++r.instances;
          if (m.map(F, m.unit(x), Y) != m.unit(F(x))) {
            r.ok = false;
            r.failure = "unit is not natural at " + x.str();
            return r;
          }
        }
      }
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Value> inner;
      for (int i = 0; i < 3; ++i) {
        std::vector<Value> mid;
        for (int j = 0; j < 3; ++j) mid.push_back(m.sample(X, rng));
        inner.push_back(m.sample(mid, rng));
      }
      Value www = m.sample(inner, rng);
      ++r.instances;
      if (m.multiply(m.multiply(www)) != m.multiply(m.map(mu, www, {}))) {
        r.ok = false;
        r.failure = "associativity fails at " + www.str();
        return r;
      }
    }
  }
  return r;
}

LawReport check_support_naturality(const FreeModel& m, std::size_t bound) {
  LawReport r;
  r.bound = bound;
  for (std::size_t b = 0; b <= bound; ++b)
    for (std::size_t a = 0; a <= b; ++a) {
      ValueSet A = standard_set(a), B = standard_set(b);
      for (const FinMap& i : all_injections(a, b)) {
        SetFn fi = as_fn(i, A, B);
        for (const Value& t : m.carrier(A)) {
          auto sa = least_support(m, t, A);
          auto sb = least_support(m, m.map(fi, t, B), B);
          ++r.instances;
          if (!sa || !sb) continue;
          ValueSet img;
          for (const Value& v : *sa) img.push_back(fi(v));
          normalize(img);
          if (img != *sb) {
            r.ok = false;
            r.failure = "support of the image of " + t.str() + " is not the image of its support";
            return r;
          }
        }
      }
    }
  return r;
}

}  // namespace clott::theories
