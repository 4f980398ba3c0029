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

#include "clott/kernel/program.hpp"

namespace clott::kernel {

using syntax::Decl;

bool ProgramResult::ok() const { return !any_failed() && !any_unknown(); }

bool ProgramResult::any_failed() const {
  for (const auto& d : decls)
    if (d.outcome == Outcome::Failed) return true;
  return false;
}

bool ProgramResult::any_unknown() const {
  for (const auto& d : decls)
    if (d.outcome == Outcome::Unknown) return true;
  return false;
}

namespace {

std::string summarize(const Decl& d) {
  std::string s;
  switch (d.kind) {
    case Decl::Kind::Clock: s = "clock " + d.name; break;
    case Decl::Kind::Tick: s = "tick " + d.name + " : " + d.clock; break;
    case Decl::Kind::Var: s = "var " + d.name; break;
    case Decl::Kind::Def: s = "def " + d.name; break;
    case Decl::Kind::Check: s = "check " + syntax::print(d.term); break;
    case Decl::Kind::Conv:
      s = "conv " + syntax::print(d.term) + " == " + syntax::print(d.term2);
      break;
  }
  return d.expect_failure ? "fail " + s : s;
}

// Runs one declaration, extending ctx on success.
void run_decl(const Decl& d, Checker& checker, Context& ctx, std::string& info) {
  auto fresh_name = [&](const std::string& x) {
    if (ctx.index_of(x) >= 0) throw TypeError("ctx-fresh", "name '" + x + "' is already declared");
  };
  switch (d.kind) {
    case Decl::Kind::Clock:
      fresh_name(d.name);
      ctx = ctx.extend_clock(d.name);
      return;
    case Decl::Kind::Tick:
      fresh_name(d.name);
      if (!ctx.has_clock(d.clock))
        throw TypeError("ctx-tick", "tick '" + d.name + "' refers to '" + d.clock + "', which is not a clock");
      ctx = ctx.extend_tick(d.name, d.clock);
      return;
    case Decl::Kind::Var: {
      fresh_name(d.name);
      Term a = checker.check_type(ctx, d.type);
      ctx = ctx.extend_var(d.name, a);
      return;
    }
    case Decl::Kind::Def: {
      fresh_name(d.name);
      Term a = checker.check_type(ctx, d.type);
      checker.check(ctx, d.term, a);
      ctx = ctx.extend_var(d.name, a, d.term);
      return;
    }
    case Decl::Kind::Check:
      if (d.type) {
        checker.check(ctx, d.term, checker.check_type(ctx, d.type));
      } else {
        info = syntax::print(checker.infer(ctx, d.term));
      }
      return;
    case Decl::Kind::Conv: {
      Term lhs = d.term;
      Term rhs = d.term2;
      if (d.type) {
        Term a = checker.check_type(ctx, d.type);
        checker.check(ctx, lhs, a);
        checker.check(ctx, rhs, a);
      } else {
        lhs = checker.check_type(ctx, lhs);
        rhs = checker.check_type(ctx, rhs);
      }
      Conv c = checker.convert(ctx, lhs, rhs);
      info = std::string(to_string(c)) + " after " + std::to_string(checker.last_unfoldings()) + " unfolding(s)";
      if (c == Conv::Apart) throw TypeError("conversion", "terms are not convertible");
      if (c == Conv::Unknown)
        throw ConversionUnknown("conversion undecided within fuel " + std::to_string(checker.options().fuel));
      return;
    }
  }
}

}  // namespace

ProgramResult run_program(const std::vector<Decl>& decls, Checker& checker) {
  ProgramResult out;
  Context ctx;
  for (const auto& d : decls) {
    DeclResult r;
    r.line = d.line;
    r.summary = summarize(d);
    std::string info;
    try {
      Context trial = ctx;
      run_decl(d, checker, trial, info);
      if (d.expect_failure) {
        r.outcome = Outcome::Failed;
        r.message = "expected a type error, but the declaration checks";
      } else {
        ctx = trial;
        r.message = info;
      }
    } catch (const TypeError& e) {
      r.rule = e.rule();
      if (d.expect_failure) {
        r.outcome = Outcome::Ok;
        r.message = std::string("rejected as expected: ") + e.what();
      } else {
        r.outcome = Outcome::Failed;
        r.message = e.what();
      }
    } catch (const ConversionUnknown& e) {
      r.outcome = Outcome::Unknown;
      r.message = e.what();
    }
    out.decls.push_back(std::move(r));
  }
  out.context = ctx;
  return out;
}

ProgramResult run_program(std::string_view text, Checker& checker) {
  return run_program(syntax::parse_program(text), checker);
}

}  // namespace clott::kernel
