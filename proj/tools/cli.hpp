// Copyright 2026 The pdom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdom/io.hpp"
#include "pdom/pdom.hpp"

// Subcommands of the pdom tool. Each command writes its result to `out`,
// diagnostics to `err`, and returns the process exit code:
//   0 success, 1 semantic failure, 2 usage error, 3 internal invariant breach.

namespace pdom::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kInternal = 3 };

enum class OutputFormat { Json, Csv, PlainText };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::PlainText;
  throw ParameterError("unknown format '" + s + "'");
}

enum class Method { Auto, Brute, Dp };

inline Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "brute") return Method::Brute;
  if (s == "dp") return Method::Dp;
  throw ParameterError("unknown method '" + s + "'");
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

inline void require_k2(int k) {
  if (k != 2) throw ParameterError("only k = 2 is supported (got k=" + std::to_string(k) + ")");
}

inline void require_range(int from, int to) {
  if (from < 5) throw ParameterError("--from must be >= 5");
  if (from > to) throw ParameterError("--from must not exceed --to");
}

inline int dp_value(int n, DominationKind kind) { return dp_min(n, kind).minimum; }

// ---------------------------------------------------------------- solve

struct SolveOptions {
  int n = 0;
  int k = 2;
  DominationKind kind = DominationKind::OneTwo;
  Method method = Method::Auto;
  bool witness = false;
  OutputFormat format = OutputFormat::PlainText;
};

inline int cmd_solve(const SolveOptions& o, std::ostream& out) {
  require_k2(o.k);
  if (o.n < 5) throw ParameterError("--n must be >= 5 (got " + std::to_string(o.n) + ")");
  const bool brute =
      o.method == Method::Brute || (o.method == Method::Auto && 2 * o.n <= 20);
  const SolveResult r =
      brute ? brute_force_min(PetersenGraph(o.n, 2), o.kind) : dp_min(o.n, o.kind);
  switch (o.format) {
    case OutputFormat::Json:
      out << to_json(r, o.witness).dump() << "\n";
      break;
    case OutputFormat::Csv:
      out << "n,k,kind,minimum,method" << (o.witness ? ",witness" : "") << "\n";
      out << r.n << ",2," << to_string(r.kind) << "," << r.minimum << "," << to_string(r.method);
      if (o.witness) out << "," << join(vertex_names(r.witness), ';');
      out << "\n";
      break;
    case OutputFormat::PlainText:
      out << "P(" << r.n << ",2) " << to_string(r.kind) << " minimum " << r.minimum << " ("
          << to_string(r.method) << ")\n";
      if (o.witness) out << "witness: " << format_set(r.witness) << "\n";
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  DominationKind kind = DominationKind::OneTwo;
  int from = 5;
  int to = 5;
  OutputFormat format = OutputFormat::PlainText;
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  require_range(o.from, o.to);
  struct Row {
    int n, formula, dp;
    bool match;
  };
  std::vector<Row> rows;
  bool all = true;
  for (int n = o.from; n <= o.to; ++n) {
    const int formula = formula_value(n, o.kind).value;
    const int dp = dp_value(n, o.kind);
    rows.push_back({n, formula, dp, formula == dp});
    all = all && formula == dp;
  }
  switch (o.format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"n", r.n}, {"formula", r.formula}, {"dp", r.dp}, {"match", r.match}});
      }
      out << json{{"kind", to_string(o.kind)}, {"rows", arr}, {"all_match", all}}.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "n,formula,dp,match\n";
      for (const auto& r : rows) out << r.n << "," << r.formula << "," << r.dp << "," << r.match << "\n";
      break;
    case OutputFormat::PlainText:
      out << "kind " << to_string(o.kind) << "\n";
      out << "     n  formula       dp  match\n";
      for (const auto& r : rows) {
        out << std::string(6 - std::min<std::size_t>(6, std::to_string(r.n).size()), ' ') << r.n
            << std::string(9 - std::min<std::size_t>(9, std::to_string(r.formula).size()), ' ')
            << r.formula
            << std::string(9 - std::min<std::size_t>(9, std::to_string(r.dp).size()), ' ') << r.dp
            << (r.match ? "    yes" : "     NO") << "\n";
      }
      out << (all ? "all rows match" : "MISMATCH") << "\n";
      break;
  }
  return all ? kOk : kFailure;
}

// ---------------------------------------------------------------- construct

struct ConstructOptions {
  int n = 0;
  DominationKind kind = DominationKind::OneTwo;
  OutputFormat format = OutputFormat::PlainText;
};

inline int cmd_construct(const ConstructOptions& o, std::ostream& out) {
  if (o.n < 5) throw ParameterError("--n must be >= 5 (got " + std::to_string(o.n) + ")");
  const Construction c = construct(o.n, o.kind);
  switch (o.format) {
    case OutputFormat::Json:
      out << to_json(c).dump() << "\n";
      break;
    case OutputFormat::Csv:
      out << "n,kind,size,source,set\n"
          << c.recipe.n << "," << to_string(c.recipe.kind) << "," << c.set.size() << ","
          << to_string(c.recipe.source) << "," << join(vertex_names(c.set), ';') << "\n";
      break;
    case OutputFormat::PlainText:
      out << "P(" << o.n << ",2) " << to_string(o.kind) << " construction, size " << c.set.size()
          << " (" << to_string(c.recipe.source) << ")\n"
          << format_set(c.set) << "\n";
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- table

struct TableOptions {
  int from = 5;
  int to = 5;
  OutputFormat format = OutputFormat::Csv;
};

inline int cmd_table(const TableOptions& o, std::ostream& out) {
  require_range(o.from, o.to);
  static const char* kColumns[] = {"n",        "gamma_ref", "gamma_t_ref", "f",
                                   "g",        "dp_plain",  "dp_total",    "dp_one_two",
                                   "dp_one_two_total"};
  std::vector<std::array<int, 9>> rows;
  for (int n = o.from; n <= o.to; ++n) {
    rows.push_back({n, gamma_ref(n), gamma_t_ref(n), f_one_two(n), g_one_two_total(n),
                    dp_value(n, DominationKind::Plain), dp_value(n, DominationKind::Total),
                    dp_value(n, DominationKind::OneTwo),
                    dp_value(n, DominationKind::OneTwoTotal)});
  }
  switch (o.format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json row = json::object();
        for (int c = 0; c < 9; ++c) row[kColumns[c]] = r[c];
        arr.push_back(row);
      }
      out << arr.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
    case OutputFormat::PlainText: {
      const char sep = o.format == OutputFormat::Csv ? ',' : ' ';
      for (int c = 0; c < 9; ++c) out << (c ? std::string(1, sep) : "") << kColumns[c];
      out << "\n";
      for (const auto& r : rows) {
        for (int c = 0; c < 9; ++c) out << (c ? std::string(1, sep) : "") << r[c];
        out << "\n";
      }
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- census

struct CensusOptions {
  int n = 0;
  std::string set;
  OutputFormat format = OutputFormat::PlainText;
};

inline int cmd_census(const CensusOptions& o, std::ostream& out) {
  if (o.format == OutputFormat::Csv) throw ParameterError("census supports json and text output");
  const PetersenGraph g(o.n, 2);
  const VertexSet s = parse_set(o.set, o.n);
  const auto report = is_valid(g, s, DominationKind::OneTwoTotal);
  if (!report.valid) {
    if (o.format == OutputFormat::Json) {
      out << json{{"valid", false}, {"violations", to_json(report.violations)}}.dump() << "\n";
    } else {
      out << "not a one-two-total set:\n";
      for (const auto& v : report.violations) {
        out << "  " << to_string(v.vertex) << " count " << v.count << " " << to_string(v.bound)
            << "\n";
      }
    }
    return kFailure;
  }
  const auto census = component_census(g, s);
  const auto ineq = census_inequalities(census, o.n, s.size());
  if (o.format == OutputFormat::Json) {
    json doc = {{"n", o.n}, {"size", s.size()}, {"valid", true}, {"violations", json::array()},
                {"census", to_json(census)}, {"inequalities", to_json(ineq)}};
    out << doc.dump() << "\n";
  } else {
    out << "valid one-two-total set of size " << s.size() << "\n";
    for (const auto& [l, x] : census.paths) out << "x_" << l << " = " << x << "\n";
    for (const auto& [l, y] : census.cycles) out << "y_" << l << " = " << y << "\n";
    auto line = [&](const char* name, const Inequality& q, const char* rel) {
      out << name << ": " << q.lhs << " " << rel << " " << q.rhs << (q.ok ? " ok" : " FAILS")
          << "\n";
    };
    line("eq2", ineq.eq2, ">=");
    line("eq3", ineq.eq3, "==");
    line("eq4", ineq.eq4, ">=");
    line("eq5", ineq.eq5, ">=");
  }
  return ineq.all_ok() ? kOk : kFailure;
}

// ---------------------------------------------------------------- eq1

struct Eq1Options {
  int n = 0;
  OutputFormat format = OutputFormat::PlainText;
};

inline int cmd_eq1(const Eq1Options& o, std::ostream& out) {
  const auto sols = enumerate_eq1(o.n);
  auto digits = [](const PairProfile& p) {
    std::string s;
    for (int v : p.x) s += static_cast<char>('0' + v);
    return s;
  };
  switch (o.format) {
    case OutputFormat::Json: {
      json arr = json::array();
      for (const auto& p : sols) arr.push_back(p.x);
      out << json{{"n", o.n}, {"count", sols.size()}, {"solutions", arr}}.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "index,profile\n";
      for (std::size_t i = 0; i < sols.size(); ++i) out << i << "," << digits(sols[i]) << "\n";
      break;
    case OutputFormat::PlainText:
      for (const auto& p : sols) out << digits(p) << "\n";
      out << "count " << sols.size() << "\n";
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- driver

/// Parses a full command line and dispatches. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domination numbers of generalized Petersen graphs P(n,2)"};
  app.require_subcommand(1);

  std::string kind = "one-two", method = "auto", format = "text";
  int n = 0, k = 2, from = 5, to = 5;
  bool witness = false;
  std::string set;
  std::string cache;

  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", format, "json, csv or text")->default_str(def);
  };

  auto* solve = app.add_subcommand("solve", "Exact minimum for one n");
  solve->add_option("--n", n)->required();
  solve->add_option("--k", k, "only 2 is accepted");
  solve->add_option("--kind", kind, "plain, total, one-two, one-two-total");
  solve->add_option("--method", method, "auto, brute or dp");
  solve->add_flag("--witness", witness, "include a minimum set");
  solve->add_option("--cache", cache, "reserved");
  add_format(solve, "text");

  auto* verify = app.add_subcommand("verify", "Compare closed forms with the DP over a range");
  verify->add_option("--kind", kind);
  verify->add_option("--from", from)->required();
  verify->add_option("--to", to)->required();
  verify->add_option("--k", k);
  add_format(verify, "text");

  auto* cons = app.add_subcommand("construct", "Emit a validated witness of size f(n) or g(n)");
  cons->add_option("--n", n)->required();
  cons->add_option("--k", k);
  cons->add_option("--kind", kind);
  add_format(cons, "text");

  auto* table = app.add_subcommand("table", "Closed forms and DP minima for a range of n");
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();
  table->add_option("--k", k);
  add_format(table, "csv");

  auto* census = app.add_subcommand("census", "Component census of a [1,2]-total set");
  census->add_option("--n", n)->required();
  census->add_option("--set", set, "comma separated vertex names, e.g. u1,v1")->required();
  census->add_option("--k", k);
  add_format(census, "text");

  auto* eq1 = app.add_subcommand("eq1", "Enumerate solutions of the pair-profile system");
  eq1->add_option("--n", n)->required();
  eq1->add_option("--k", k);
  add_format(eq1, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    require_k2(k);
    if (!cache.empty()) throw ParameterError("--cache is not implemented");
    if (table->parsed() && format == "text" && table->get_option("--format")->count() == 0) {
      format = "csv";
    }
    const OutputFormat fmt = parse_format(format);
    if (solve->parsed()) {
      return cmd_solve({n, k, parse_kind(kind), parse_method(method), witness, fmt}, out);
    }
    if (verify->parsed()) return cmd_verify({parse_kind(kind), from, to, fmt}, out);
    if (cons->parsed()) return cmd_construct({n, parse_kind(kind), fmt}, out);
    if (table->parsed()) return cmd_table({from, to, fmt}, out);
    if (census->parsed()) return cmd_census({n, set, fmt}, out);
    if (eq1->parsed()) return cmd_eq1({n, fmt}, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace pdom::cli
