#pragma once

// Command-line front end. run() is the whole program; main() only forwards argv.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "oseries/oseries.hpp"

namespace oseries::cli {

/// Output sink for one result. Text mode prints the caller's lines verbatim;
/// structured mode prints `record=<kind>`, one `key=value` line per field, then a blank line.
class Emitter {
 public:
  Emitter(std::ostream& out, bool structured) : out_(out), structured_(structured) {}

  bool structured() const { return structured_; }

  void begin(const std::string& kind)
  {
    if (structured_) out_ << "record=" << kind << '\n';
  }
  void field(const std::string& key, const std::string& value)
  {
    if (structured_) out_ << key << '=' << value << '\n';
  }
  void text(const std::string& line)
  {
    if (!structured_) out_ << line << '\n';
  }
  void end()
  {
    if (structured_) out_ << '\n';
  }

 private:
  std::ostream& out_;
  bool structured_;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

enum class InputKind { Expression, ChainSeries, NonStrictSeries, HStar };

inline InputKind classify(const std::string& text)
{
  if (text.find("z[") != std::string::npos) return InputKind::ChainSeries;
  if (text.find("w[") != std::string::npos) return InputKind::NonStrictSeries;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '(') return InputKind::HStar;
  return InputKind::Expression;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text)
{
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw SyntaxError("expected an integer list like 2,3,1; got '" + text + "'", 0);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw SyntaxError("expected an integer list like 2,3,1; got '" + text + "'", used);
    out.push_back(v);
  }
  if (out.empty()) throw SyntaxError("empty integer list", 0);
  return out;
}

inline std::string join(const std::vector<std::int64_t>& v)
{
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + std::to_string(v[j]);
  return s;
}

inline std::string to_text(const Rational& q) { return to_string(ExactProbability(q)); }

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact order series for series-parallel and Wixarika posets", "oseries"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  std::string input;
  bool nonstrict = false;
  std::size_t to = 10;
  std::optional<std::size_t> size;

  auto* eval_cmd = app.add_subcommand("eval", "Strict (or non-strict) order series of a poset expression");
  eval_cmd->add_option("expr", input, "Poset expression, e.g. d(mu(1,1))")->required();
  eval_cmd->add_flag("--nonstrict", nonstrict, "Print the non-strict series in the w basis");

  auto* expand_cmd = app.add_subcommand("expand", "Coefficients 0..N of an expression or series");
  expand_cmd->add_option("input", input, "Poset expression or series text")->required();
  expand_cmd->add_option("--to", to, "Last coefficient index");
  expand_cmd->add_flag("--nonstrict", nonstrict, "Expand the non-strict series of an expression");
  expand_cmd->add_option("--size", size, "Poset size for a w-basis series");

  auto* hstar_cmd = app.add_subcommand("hstar", "h* vector of an expression or chain series, or its inverse");
  hstar_cmd->add_option("input", input, "Poset expression, chain series (needs --size) or h* vector (1,2,0)")
      ->required();
  hstar_cmd->add_option("--size", size, "Poset size for a chain series");
  hstar_cmd->add_option("--to", to, "Last Ehrhart coefficient (structured output)");

  auto* inv_cmd = app.add_subcommand("invariants", "Structural invariants of a poset expression");
  inv_cmd->add_option("expr", input, "Poset expression")->required();

  bool sp = false;
  std::size_t max_points = 9;
  std::size_t jobs = 1;
  auto* solve_cmd = app.add_subcommand("solve", "All words (or SP posets) with a given strict series");
  solve_cmd->add_option("series", input, "Chain series, e.g. 3*z[6] + 4*z[7]")->required();
  solve_cmd->add_flag("--sp", sp, "Search all series-parallel posets instead of words");
  solve_cmd->add_option("--max-points", max_points, "Point cap for --sp");
  solve_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  IdentityRanges ranges;
  bool perturb = false;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep a binomial identity; `verify list` names them");
  verify_cmd->add_option("identity", input, "Identity name")->required();
  verify_cmd->add_option("--p-max", ranges.p_max);
  verify_cmd->add_option("--q-max", ranges.q_max);
  verify_cmd->add_option("--k-max", ranges.k_max);
  verify_cmd->add_option("--n-max", ranges.n_max);
  verify_cmd->add_option("--m-max", ranges.m_max);
  verify_cmd->add_option("--v-max", ranges.v_max);
  verify_cmd->add_option("--extra", ranges.extra, "Sweep length beyond the lower bound");
  verify_cmd->add_flag("--perturb", perturb, "Add 1 to the right-hand side (sensitivity check)");

  std::string groups_text, draws_text;
  std::int64_t draws = 0;
  auto* nhg_cmd = app.add_subcommand("nhg", "Negative hypergeometric distribution");
  nhg_cmd->add_option("groups", groups_text, "Group sizes, e.g. 2,3,1")->required();
  nhg_cmd->add_option("draws", draws, "Number of draws W")->required();
  nhg_cmd->add_option("--v", draws_text, "Draw counts per group; prints their probability");

  bool direct = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force counts of order-preserving maps");
  oracle_cmd->add_option("expr", input, "Poset expression")->required();
  oracle_cmd->add_option("--to", to, "Last n");
  oracle_cmd->add_flag("--direct", direct, "Enumerate maps one by one (at most 12 points)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Emitter em(out, format == "structured");
  try {
    if (*eval_cmd) {
      const auto e = parse_expr(input);
      const auto strict = eval_strict(e);
      const auto loose = eval_nonstrict(e);
      em.begin("eval");
      em.field("expr", to_string(e));
      em.field("size", std::to_string(e.point_count()));
      em.field("strict", to_string(strict));
      em.field("nonstrict", to_string(loose));
      em.end();
      em.text(nonstrict ? to_string(loose) : to_string(strict));
    } else if (*expand_cmd) {
      SeriesExpansion coeffs;
      std::string source;
      switch (detail::classify(input)) {
        case detail::InputKind::ChainSeries:
          coeffs = expand(parse_chain_series(input), to);
          source = "chain";
          break;
        case detail::InputKind::NonStrictSeries:
          coeffs = expand(parse_nonstrict_series(input, size), to);
          source = "nonstrict";
          break;
        case detail::InputKind::HStar:
          throw SyntaxError("expand takes an expression or a series, not an h* vector", 0);
        case detail::InputKind::Expression: {
          const auto e = parse_expr(input);
          coeffs = nonstrict ? expand(eval_nonstrict(e), to) : expand(eval_strict(e), to);
          source = nonstrict ? "expr-nonstrict" : "expr-strict";
          break;
        }
      }
      em.begin("expand");
      em.field("input", input);
      em.field("source", source);
      em.field("to", std::to_string(to));
      em.field("coefficients", to_string(coeffs));
      em.end();
      em.text(to_string(coeffs));
    } else if (*hstar_cmd) {
      const auto kind = detail::classify(input);
      HStarVector h;
      ChainSeries chain;
      if (kind == detail::InputKind::HStar) {
        h = parse_hstar(input);
        chain = hstar_to_chain(h);
      } else if (kind == detail::InputKind::ChainSeries) {
        if (!size) throw InvalidSize("a chain series needs --size");
        chain = parse_chain_series(input);
        h = chain_to_hstar(chain, *size);
      } else if (kind == detail::InputKind::Expression) {
        const auto e = parse_expr(input);
        chain = eval_strict(e);
        h = chain_to_hstar(chain, e.point_count());
      } else {
        throw SyntaxError("hstar takes an expression, a chain series or an h* vector", 0);
      }
      const auto constraints = chain_hstar_constraints(h);
      em.begin("hstar");
      em.field("input", input);
      em.field("size", std::to_string(h.size()));
      em.field("hstar", to_string(h));
      em.field("chain", to_string(chain));
      em.field("ehrhart", to_string(ehrhart_expansion(h, to)));
      em.field("chain_constraints_vanish", detail::yes_no(constraints.all_vanish()));
      em.end();
      em.text(kind == detail::InputKind::HStar ? to_string(chain) : to_string(h));
    } else if (*inv_cmd) {
      const auto e = parse_expr(input);
      const auto inv = invariants(e);
      const auto rep = feasibility(eval_strict(e));
      std::vector<std::pair<std::string, std::string>> kv = {
          {"i", std::to_string(inv.max_chain)},
          {"k", std::to_string(inv.n_points)},
          {"d", std::to_string(inv.dee_count)},
          {"m", std::to_string(inv.mu_count)},
          {"leaves", std::to_string(inv.leaf_count)},
          {"betti", std::to_string(inv.betti)},
          {"components", std::to_string(inv.components)},
          {"wixarika", detail::yes_no(e.is_wixarika())},
          {"alternating_sum", rep.alternating_sum.str()},
          {"feasible", detail::yes_no(rep.feasible)},
      };
      em.begin("invariants");
      em.field("expr", to_string(e));
      std::string line;
      for (const auto& [k, v] : kv) {
        em.field(k, v);
        line += (line.empty() ? "" : " ") + k + "=" + v;
      }
      em.end();
      em.text(line);
    } else if (*solve_cmd) {
      const auto f = parse_chain_series(input);
      SolveOptions opts{jobs, max_points};
      const auto result = sp ? solve_sp(f, opts) : solve(f, opts);
      em.begin("solve");
      em.field("series", to_string(f));
      em.field("mode", sp ? "sp" : "words");
      em.field("feasible", detail::yes_no(sp ? result.report.sp_feasible : result.report.feasible));
      em.field("i", std::to_string(result.report.i));
      em.field("k", std::to_string(result.report.k));
      em.field("d", std::to_string(result.report.d));
      em.field("m", std::to_string(result.report.m));
      em.field("candidates", std::to_string(result.candidates));
      em.field("passed_filter", std::to_string(result.passed_filter));
      em.field("classes", std::to_string(result.classes.size()));
      for (std::size_t c = 0; c < result.classes.size(); ++c) {
        std::string line;
        for (const auto& m : result.classes[c].members) line += (line.empty() ? "" : "; ") + to_string(m);
        em.field("class." + std::to_string(c + 1), line);
        em.text(line);
      }
      em.end();
      if (result.classes.empty()) em.text("no solutions");
    } else if (*verify_cmd) {
      if (input == "list") {
        for (const auto& e : identity_registry()) {
          em.begin("identity");
          em.field("name", e.name);
          em.field("description", e.description);
          em.end();
          em.text(e.name + "  " + e.description);
        }
        return 0;
      }
      const auto* entry = find_identity(input);
      if (!entry) {
        err << "unknown identity '" << input << "'; run `oseries verify list`\n";
        return 2;
      }
      const auto r = entry->run(ranges, perturb);
      em.begin("verify");
      em.field("name", r.name);
      em.field("pass", detail::yes_no(r.pass));
      em.field("cases", std::to_string(r.cases));
      em.field("ranges", r.ranges);
      em.field("perturbed", detail::yes_no(perturb));
      if (r.counterexample) {
        em.field("params", r.params);
        em.field("counterexample", detail::join(r.counterexample->params));
        em.field("lhs", r.counterexample->lhs.str());
        em.field("rhs", r.counterexample->rhs.str());
      }
      em.end();
      em.text(to_string(r));
      return r.pass ? 0 : 1;
    } else if (*nhg_cmd) {
      NHGParams p{detail::parse_int_list(groups_text), draws};
      em.begin("nhg");
      em.field("groups", detail::join(p.groups));
      em.field("draws", std::to_string(p.draws));
      if (!draws_text.empty()) {
        const auto v = detail::parse_int_list(draws_text);
        const auto pmf = to_string(nhg_pmf(p, v));
        em.field("v", detail::join(v));
        em.field("pmf", pmf);
        em.text("pmf=" + pmf);
      }
      const auto norm = to_string(nhg_normalization(p));
      em.field("normalization", norm);
      em.text("normalization=" + norm);
      for (std::size_t j = 1; j <= p.groups.size(); ++j) {
        const auto ex = detail::to_text(nhg_expectation(p, j));
        em.field("expectation." + std::to_string(j), ex);
        em.text("E[" + std::to_string(j) + "]=" + ex);
      }
      em.end();
    } else if (*oracle_cmd) {
      const auto e = parse_expr(input);
      const auto h = hasse(e);
      std::vector<BigInt> strict, loose;
      std::string method;
      if (direct) {
        if (h.vertex_count() > max_direct_vertices)
          throw SizeLimitError("--direct handles at most " + std::to_string(max_direct_vertices) + " points");
        for (std::size_t n = 0; n <= to; ++n) {
          strict.emplace_back(count_strict_direct(h, n));
          loose.emplace_back(count_nonstrict_direct(h, n));
        }
        method = "direct";
      } else {
        IdealLattice lattice(h);
        strict = lattice.strict_counts(to);
        loose = lattice.nonstrict_counts(to);
        method = "ideal-lattice";
      }
      auto as_text = [](const std::vector<BigInt>& v) {
        std::string s;
        for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + v[j].str();
        return s;
      };
      auto series_text = [&](const SeriesExpansion& x) { return to_string(x); };
      const auto strict_series = series_text(expand(eval_strict(e), to));
      const auto loose_series = series_text(expand(eval_nonstrict(e), to));
      const bool agree = as_text(strict) == strict_series && as_text(loose) == loose_series;
      em.begin("oracle");
      em.field("expr", to_string(e));
      em.field("method", method);
      em.field("to", std::to_string(to));
      em.field("strict", as_text(strict));
      em.field("nonstrict", as_text(loose));
      em.field("agrees_with_series", detail::yes_no(agree));
      em.end();
      em.text("strict=" + as_text(strict));
      em.text("nonstrict=" + as_text(loose));
      em.text(std::string("agrees_with_series=") + detail::yes_no(agree));
      return agree ? 0 : 1;
    }
  } catch (const InfeasibleInput& e) {
    err << "infeasible: " << to_string(e.report()) << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace oseries::cli
