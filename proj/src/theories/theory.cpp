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

#include "clott/theories/theory.hpp"

#include "clott/core/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clott::theories {

const char* to_string(Builtin b) {
  switch (b) {
    case Builtin::Custom: return "custom";
    case Builtin::Semilattice: return "semilattice";
    case Builtin::Convex: return "convex";
    case Builtin::Monoid: return "monoid";
    case Builtin::CommutativeMonoid: return "commutative-monoid";
    case Builtin::Truncation: return "truncation";
  }
  return "?";
}

Builtin builtin_from_string(const std::string& s) {
  for (Builtin b : {Builtin::Custom, Builtin::Semilattice, Builtin::Convex, Builtin::Monoid,
                    Builtin::CommutativeMonoid, Builtin::Truncation})
    if (s == to_string(b)) return b;
  throw std::invalid_argument("unknown builtin theory '" + s + "'");
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Position of the '=' separating the two sides, outside brackets.
std::size_t split_equation(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '=' && depth == 0) return i;
  }
  return std::string_view::npos;
}

}  // namespace

Theory parse_theory(std::string_view text, std::string name) {
  Theory th;
  th.name = std::move(name);
  std::vector<std::pair<int, std::string>> eq_lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (auto c = line.find("--"); c != std::string::npos) line = trim(line.substr(0, c));
    if (line.empty()) continue;
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    std::string rest = trim(line.substr(kw.size()));
    if (kw == "op") {
      auto slash = rest.rfind('/');
      if (slash == std::string::npos) throw ParseError("expected op name/arity", line_no, 1);
      std::string opname = trim(rest.substr(0, slash));
      if (auto br = opname.find('['); br != std::string::npos) opname = trim(opname.substr(0, br));
      int arity = 0;
      try {
        arity = std::stoi(rest.substr(slash + 1));
      } catch (const std::exception&) {
        throw ParseError("malformed arity", line_no, static_cast<int>(slash) + 5);
      }
      if (opname.empty() || arity < 0) throw ParseError("malformed operation declaration", line_no, 1);
      th.signature[opname] = arity;
    } else if (kw == "eq") {
      eq_lines.emplace_back(line_no, rest);
    } else if (kw == "builtin") {
      try {
        th.builtin = builtin_from_string(rest);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, 9);
      }
    } else if (kw == "name") {
      th.name = rest;
    } else {
      throw ParseError("expected 'op', 'eq', 'builtin' or 'name'", line_no, 1);
    }
  }
  for (const auto& [ln, rest] : eq_lines) {
    std::size_t eqpos = split_equation(rest);
    if (eqpos == std::string::npos) throw ParseError("expected '=' in equation", ln, 1);
    try {
      th.equations.push_back({syntax::parse_alg_term(rest.substr(0, eqpos), th.signature),
                              syntax::parse_alg_term(rest.substr(eqpos + 1), th.signature)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), ln, e.column());
    }
  }
  return th;
}

Theory load_theory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string name = path;
  if (auto s = name.find_last_of('/'); s != std::string::npos) name = name.substr(s + 1);
  if (auto d = name.rfind('.'); d != std::string::npos) name = name.substr(0, d);
  Theory t = parse_theory(ss.str(), name);
  return t;
}

bool is_drop_equation(const Equation& eq) { return syntax::free_vars(eq.lhs) != syntax::free_vars(eq.rhs); }

std::vector<std::size_t> drop_equations(const Theory& t) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.equations.size(); ++i)
    if (is_drop_equation(t.equations[i])) out.push_back(i);
  return out;
}

bool has_drop_equations(const Theory& t) { return !drop_equations(t).empty(); }

std::string print(const Equation& eq) { return syntax::print(eq.lhs) + " = " + syntax::print(eq.rhs); }

Theory semilattice_theory() {
  return parse_theory(
      "name semilattice\nbuiltin semilattice\nop join/2\nop bot/0\n"
      "eq join(x, y) = join(y, x)\n"
      "eq join(join(x, y), z) = join(x, join(y, z))\n"
      "eq join(x, x) = x\n"
      "eq join(x, bot) = x\n");
}

Theory convex_theory() {
  return parse_theory(
      "name convex\nbuiltin convex\nop oplus[p]/2\n"
      "eq oplus[p](x, x) = x\n"
      "eq oplus[p](x, y) = oplus[1-p](y, x)\n"
      "eq oplus[q](oplus[p](x, y), z) = oplus[pq](x, oplus[(1-p)q/(1-pq)](y, z))\n");
}

Theory monoid_theory() {
  return parse_theory(
      "name monoid\nbuiltin monoid\nop mul/2\nop one/0\n"
      "eq mul(mul(x, y), z) = mul(x, mul(y, z))\n"
      "eq mul(one, x) = x\n"
      "eq mul(x, one) = x\n");
}

Theory commutative_monoid_theory() {
  return parse_theory(
      "name commutative-monoid\nbuiltin commutative-monoid\nop add/2\nop zero/0\n"
      "eq add(add(x, y), z) = add(x, add(y, z))\n"
      "eq add(x, y) = add(y, x)\n"
      "eq add(zero, x) = x\n");
}

Theory truncation_theory() { return parse_theory("name truncation\nbuiltin truncation\neq x = y\n"); }

Theory builtin_theory(Builtin b) {
  switch (b) {
    case Builtin::Semilattice: return semilattice_theory();
    case Builtin::Convex: return convex_theory();
    case Builtin::Monoid: return monoid_theory();
    case Builtin::CommutativeMonoid: return commutative_monoid_theory();
    case Builtin::Truncation: return truncation_theory();
    case Builtin::Custom: break;
  }
  throw std::invalid_argument("not a builtin theory");
}

}  // namespace clott::theories
