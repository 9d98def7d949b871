#include "qcalc/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcalc/eval.hpp"
#include "qcalc/limits.hpp"
#include "qcalc/repr.hpp"
#include "qcalc/verify.hpp"

namespace qcalc {

namespace {

using nlohmann::json;

struct ModeFlags {
  int n = 0;             // 0 means generic
  bool generic = false;  // explicit --generic
  bool json_out = false;
};

void add_mode_flags(CLI::App* cmd, ModeFlags& mode, bool root_only) {
  auto* n_opt = cmd->add_option("-n,--root", mode.n,
                                "odd n >= 3: work at q = zeta_n");
  if (root_only) {
    n_opt->required();
  } else {
    cmd->add_flag("--generic", mode.generic, "generic q (the default)");
  }
  cmd->add_flag("--json", mode.json_out, "machine-readable JSON lines");
}

int checked_mode(const ModeFlags& mode, std::ostream& err) {
  if (mode.n != 0 && mode.generic) {
    err << "error: --generic and -n are mutually exclusive\n";
    return -1;
  }
  if (mode.n != 0 && (mode.n < 3 || mode.n % 2 == 0)) {
    err << "error: n must be odd and >= 3\n";
    return -1;
  }
  return mode.n;
}

std::string cyclo_display(const CycloNum& v) {
  return v.is_rational() ? to_string(v.as_rational()) : v.str();
}

int cmd_normalize_or_bracket(bool bracket_cmd, const ModeFlags& mode,
                             const std::string& expr_a,
                             const std::string& expr_b, std::ostream& out,
                             std::ostream& err) {
  int n = checked_mode(mode, err);
  if (n < 0) return 2;
  ExprPtr a = parse(expr_a);
  ExprPtr b;
  if (bracket_cmd) b = parse(expr_b);
  std::string result;
  if (n == 0) {
    GradedElem val = bracket_cmd
                         ? graded_bracket(eval_generic(*a), eval_generic(*b))
                         : eval_generic(*a);
    result = val.str();
  } else {
    FsElem val = bracket_cmd
                     ? fs_graded_bracket(eval_root(*a, n), eval_root(*b, n))
                     : eval_root(*a, n);
    result = val.str();
  }
  if (mode.json_out) {
    json j{{"command", bracket_cmd ? "bracket" : "normalize"},
           {"mode", n == 0 ? json("generic") : json(n)},
           {"result", result}};
    out << j.dump() << "\n";
  } else {
    out << result << "\n";
  }
  return 0;
}

int cmd_limit(const ModeFlags& mode, const std::string& expr_text,
              std::ostream& out, std::ostream& err) {
  int n = checked_mode(mode, err);
  if (n <= 0) {
    if (n == 0) err << "error: limit requires -n\n";
    return 2;
  }
  ExprPtr e = parse(expr_text);
  ScalarQuotient quot = eval_scalar_quotient(*e);
  try {
    LimitResult lr = limit_quotient(quot.num, quot.den, n);
    if (mode.json_out) {
      json j{{"command", "limit"},
             {"n", n},
             {"value", cyclo_display(lr.value)},
             {"coeffs", lr.value.str()},
             {"cancelled_order", lr.cancelled_order}};
      out << j.dump() << "\n";
    } else {
      out << cyclo_display(lr.value)
          << ", cancelled_order = " << lr.cancelled_order << "\n";
    }
    return 0;
  } catch (const PoleAtRoot& pole) {
    json j{{"error", "PoleAtRoot"}, {"n", pole.n}, {"input", expr_text}};
    if (mode.json_out)
      out << j.dump() << "\n";
    else
      out << "error: PoleAtRoot — the limit diverges at zeta_" << pole.n
          << "\n";
    return 1;
  }
}

int cmd_rep(const ModeFlags& mode, const std::string& op, int cutoff,
            bool numeric, std::ostream& out, std::ostream& err) {
  int n = checked_mode(mode, err);
  if (n <= 0) {
    if (n == 0) err << "error: rep requires -n\n";
    return 2;
  }
  if (cutoff <= 0) cutoff = 2 * n;
  json j = rep_matrix_json(n, op, cutoff, numeric);
  out << (mode.json_out ? j.dump() : j.dump(2)) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int rmax, bool json_out,
               std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.eq15_rmax = rmax;
  std::vector<CriterionResult> results;
  try {
    results = run_suite(suite, opts);
  } catch (const std::invalid_argument& bad) {
    err << "error: " << bad.what() << "\n";
    return 2;
  }
  bool all_pass = true;
  int passed = 0;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    passed += r.pass ? 1 : 0;
    if (json_out) {
      json j{{"criterion", r.id}, {"name", r.name},     {"pass", r.pass},
             {"ms", r.ms},        {"limit_s", r.limit_s}, {"detail", r.detail}};
      if (!r.records.empty()) j["records"] = r.records;
      out << j.dump() << "\n";
    } else {
      out << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << " "
          << r.name << " (" << std::fixed << std::setprecision(1) << r.ms
          << " ms, limit " << std::setprecision(0) << r.limit_s << " s): "
          << r.detail << "\n";
    }
  }
  if (json_out) {
    json j{{"suite", suite},
           {"passed", passed},
           {"total", results.size()},
           {"pass", all_pass}};
    out << j.dump() << "\n";
  } else {
    out << "verify: " << passed << "/" << results.size()
        << " criteria passed (suite " << suite << ", seed "
        << default_seed() << ")\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact computer algebra for the q-deformed calculus", "qcalc"};
  app.require_subcommand(1);

  ModeFlags norm_mode, brk_mode, lim_mode, rep_mode;
  std::string norm_expr, brk_a, brk_b, lim_expr;
  std::string rep_op, verify_suite = "all";
  int rep_cutoff = 0, verify_rmax = 12;
  bool rep_numeric = false, verify_json = false;

  auto* norm = app.add_subcommand(
      "normalize", "normal-order an expression and print its canonical form");
  add_mode_flags(norm, norm_mode, false);
  norm->add_option("expr", norm_expr, "expression")->required();

  auto* brk = app.add_subcommand("bracket",
                                 "graded bracket [A,B] of two expressions");
  add_mode_flags(brk, brk_mode, false);
  brk->add_option("a", brk_a, "left entry")->required();
  brk->add_option("b", brk_b, "right entry")->required();

  auto* lim = app.add_subcommand(
      "limit", "exact q -> zeta_n limit of a scalar expression");
  add_mode_flags(lim, lim_mode, true);
  lim->add_option("expr", lim_expr, "scalar expression")->required();

  auto* rep = app.add_subcommand("rep", "operator matrix as JSON");
  add_mode_flags(rep, rep_mode, true);
  rep->add_option("--op", rep_op,
                  "operator: a, adag, theta, dtheta, D, qN, z, dz")
      ->required();
  rep->add_option("--cutoff", rep_cutoff, "matrix cutoff (default 2n)");
  rep->add_flag("--numeric", rep_numeric, "numeric entries [re, im]");

  auto* ver = app.add_subcommand("verify", "run acceptance suites");
  ver->add_option("--suite", verify_suite, "lemmas, eq15, defcr, fsusy or all")
      ->capture_default_str();
  ver->add_option("--rmax", verify_rmax, "upper r for the eq15 identity")
      ->capture_default_str();
  ver->add_flag("--json", verify_json, "machine-readable JSON lines");

  std::vector<const char*> argv;
  argv.push_back("qcalc");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& help) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& pe) {
    err << "error: " << pe.what() << "\n";
    return 2;
  }

  try {
    if (norm->parsed())
      return cmd_normalize_or_bracket(false, norm_mode, norm_expr, "", out, err);
    if (brk->parsed())
      return cmd_normalize_or_bracket(true, brk_mode, brk_a, brk_b, out, err);
    if (lim->parsed()) return cmd_limit(lim_mode, lim_expr, out, err);
    if (rep->parsed())
      return cmd_rep(rep_mode, rep_op, rep_cutoff, rep_numeric, out, err);
    if (ver->parsed())
      return cmd_verify(verify_suite, verify_rmax, verify_json, out, err);
  } catch (const ParseError& pe) {
    err << "error: " << pe.what() << "\n";
    return 2;
  } catch (const EvalError& ee) {
    err << "error: " << ee.what() << "\n";
    return 2;
  } catch (const PoleAtRoot& pole) {
    json j{{"error", "PoleAtRoot"}, {"n", pole.n}};
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace qcalc
