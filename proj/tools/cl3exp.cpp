// cl3exp: exponentials, trig functions and linear ODE propagators of
// multivectors in Cl(0,3), Cl(3,0), Cl(1,2) and Cl(2,1).

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cl3exp/error.hpp"
#include "cl3exp/exp_closed.hpp"
#include "cl3exp/exp_series.hpp"
#include "cl3exp/expression.hpp"
#include "cl3exp/golden.hpp"
#include "cl3exp/ode.hpp"
#include "cl3exp/trig.hpp"
#include "json_line.hpp"

namespace {

using namespace cl3;
using cli::JsonLine;

enum ExitCode : int { kOk = 0, kFailure = 1, kParse = 2, kConvergence = 3, kDisagreement = 4 };

struct ExpOptions {
  std::string algebra;
  std::string mv;
  std::string mv_file;
  std::string engine = "both";
  bool json = false;
  double tol = 1e-8;
  int terms = 200;
};

struct TrigOptions {
  std::string algebra;
  std::string mv;
  std::string fn = "cos";
  bool json = false;
  int terms = 200;
};

struct OdeOptions {
  std::string algebra;
  std::string a;
  std::string b;
  std::string x0;
  std::string force;
  double t = 1.0;
  int samples = 2;
  int steps = 400;
  bool json = false;
};

JsonLine algebra_json(Signature sig) {
  JsonLine j;
  j.integer("p", sig.p()).integer("q", sig.q());
  return j;
}

std::string branch_label(const ExpReport& r) {
  return std::string(to_string(r.branches[0])) + "/" + std::string(to_string(r.branches[1]));
}

struct ExpOutcome {
  Multivector input;
  ExpReport closed;
  std::optional<SeriesResult> series;
  bool has_closed = false;
};

double scaled_discrepancy(const ExpOutcome& o) {
  return max_abs_diff(o.closed.value, o.series->value) / std::max(1.0, max_abs(o.closed.value));
}

void print_exp(const ExpOutcome& o, const std::string& engine, bool json) {
  const Signature sig = o.input.sig();
  const MixingScalars& mix = o.closed.mixing;
  const Multivector& result = o.has_closed ? o.closed.value : o.series->value;
  if (json) {
    JsonLine mixing;
    mixing.number("a_plus_sq", mix.a_plus_sq)
        .number("a_minus_sq", mix.a_minus_sq)
        .optional_number("a_plus", mix.a_plus)
        .optional_number("a_minus", mix.a_minus);
    JsonLine j;
    j.object("algebra", algebra_json(sig))
        .numbers("input", o.input.span())
        .string("engine", engine)
        .numbers("result", result.span())
        .object("mixing", mixing)
        .string("branch", o.has_closed ? branch_label(o.closed) : "n/a");
    if (o.series) {
      JsonLine s;
      s.integer("terms", o.series->terms)
          .integer("scaling_exponent", o.series->scaling_exponent)
          .numbers("result", o.series->value.span());
      j.object("series", s);
    } else {
      j.null("series");
    }
    if (o.has_closed && o.series) {
      j.number("discrepancy", max_abs_diff(o.closed.value, o.series->value))
          .number("scaled_discrepancy", scaled_discrepancy(o));
    } else {
      j.null("discrepancy").null("scaled_discrepancy");
    }
    std::cout << j.str() << '\n';
    return;
  }
  std::cout << "algebra      Cl(" << sig.to_string() << ")\n"
            << "input        " << format_multivector(o.input) << '\n'
            << "exp          " << format_multivector(result) << '\n'
            << "a+^2         " << format_number(mix.a_plus_sq) << '\n'
            << "a-^2         " << format_number(mix.a_minus_sq) << '\n';
  if (mix.a_plus) std::cout << "a+           " << format_number(*mix.a_plus) << '\n';
  if (mix.a_minus) std::cout << "a-           " << format_number(*mix.a_minus) << '\n';
  if (o.has_closed) std::cout << "branch       " << branch_label(o.closed) << '\n';
  if (o.series) {
    std::cout << "series       " << format_multivector(o.series->value) << '\n'
              << "terms        " << o.series->terms << " (argument scaled by 2^-"
              << o.series->scaling_exponent << ")\n";
  }
  if (o.has_closed && o.series) {
    std::cout << "discrepancy  " << format_number(max_abs_diff(o.closed.value, o.series->value))
              << " (scaled " << format_number(scaled_discrepancy(o)) << ")\n";
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  return lines;
}

int run_exp(const ExpOptions& opt) {
  const Signature sig = parse_signature(opt.algebra);
  SeriesConfig cfg;
  cfg.max_terms = opt.terms;
  cfg.validate();
  const bool want_closed = opt.engine != "series";
  const bool want_series = opt.engine != "closed";

  std::vector<Multivector> inputs;
  if (!opt.mv_file.empty()) {
    const std::vector<std::string> lines = read_lines(opt.mv_file);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        inputs.push_back(parse_multivector(lines[i], sig));
      } catch (const ParseError& e) {
        throw ParseError(opt.mv_file + ":" + std::to_string(i + 1) + ": " + e.what(), e.token(),
                         e.position());
      }
    }
  } else {
    inputs.push_back(parse_multivector(opt.mv, sig));
  }

  // Batches are evaluated in parallel; output keeps input order.
  std::vector<std::optional<ExpOutcome>> outcomes(inputs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(inputs.size()); ++i) {
    try {
      ExpOutcome o{inputs[i], ExpReport{inputs[i], mixing(inputs[i]), {Branch::Limit, Branch::Limit}}};
      if (want_closed) {
        o.closed = exp_closed_report(inputs[i]);
        o.has_closed = true;
      }
      if (want_series) o.series = exp_series_report(inputs[i], cfg);
      outcomes[i] = std::move(o);
    } catch (...) {
#pragma omp critical(cl3_cli_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  int code = kOk;
  for (const std::optional<ExpOutcome>& slot : outcomes) {
    const ExpOutcome& o = *slot;
    print_exp(o, opt.engine, opt.json);
    if (o.has_closed && o.series && !(scaled_discrepancy(o) <= opt.tol)) code = kDisagreement;
  }
  if (code == kDisagreement) {
    std::cerr << "cl3exp: closed-form and series results disagree beyond --tol "
              << format_number(opt.tol) << '\n';
  }
  return code;
}

int run_trig(const TrigOptions& opt) {
  const Signature sig = parse_signature(opt.algebra);
  const Multivector a = parse_multivector(opt.mv, sig);
  SeriesConfig cfg;
  cfg.max_terms = opt.terms;
  Multivector r(sig);
  if (opt.fn == "cos") r = cos_mv(a, cfg);
  else if (opt.fn == "sin") r = sin_mv(a, cfg);
  else if (opt.fn == "cosh") r = cosh_mv(a);
  else r = sinh_mv(a);

  if (opt.json) {
    JsonLine j;
    j.object("algebra", algebra_json(sig))
        .string("function", opt.fn)
        .numbers("input", a.span())
        .numbers("result", r.span());
    std::cout << j.str() << '\n';
  } else {
    std::cout << "algebra      Cl(" << sig.to_string() << ")\n"
              << "input        " << format_multivector(a) << '\n'
              << opt.fn << std::string(13 - opt.fn.size(), ' ') << format_multivector(r) << '\n';
  }
  return kOk;
}

int run_ode(const OdeOptions& opt) {
  const Signature sig = parse_signature(opt.algebra);
  const Multivector a = parse_multivector(opt.a, sig);
  const Multivector x0 = parse_multivector(opt.x0, sig);
  std::optional<Multivector> b;
  if (!opt.b.empty()) b = parse_multivector(opt.b, sig);
  std::optional<Multivector> f;
  if (!opt.force.empty()) f = parse_multivector(opt.force, sig);
  if (b && f) throw InvalidArgument("--force cannot be combined with --B");
  if (opt.samples < 1) throw InvalidArgument("--samples must be >= 1");
  if (!std::isfinite(opt.t)) throw InvalidArgument("--t must be finite");

  if (!opt.json) std::cout << "# Cl(" << sig.to_string() << ")  t  X(t)\n";
  for (int i = 0; i < opt.samples; ++i) {
    const double t = opt.samples == 1 ? opt.t : opt.t * i / (opt.samples - 1);
    Multivector x(sig);
    if (b) {
      x = propagate_two_sided(a, *b, x0, t);
    } else if (f) {
      const Multivector force = *f;
      x = propagate_forced(OdeProblem{a, std::nullopt, x0, [force](double) { return force; }, t,
                                      opt.steps});
    } else {
      x = propagate_homogeneous(a, x0, t);
    }
    if (opt.json) {
      JsonLine j;
      j.object("algebra", algebra_json(sig)).number("t", t).numbers("x", x.span());
      std::cout << j.str() << '\n';
    } else {
      std::cout << format_number(t) << "  " << format_multivector(x) << '\n';
    }
  }
  return kOk;
}

int run_selftest() {
  bool all_ok = true;
  for (const WorkedExample& ex : worked_examples()) {
    const Multivector a = parse_multivector(ex.expression, ex.sig);
    const Multivector want(ex.sig, ex.expected);
    const ExpReport r = exp_closed_report(a);
    double worst = 0.0;
    for (std::size_t i = 0; i < kBladeCount; ++i) {
      const double denom = std::max(std::abs(want[i]), 1e-3 * max_abs(want));
      worst = std::max(worst, std::abs(r.value[i] - want[i]) / denom);
    }
    const double series_err =
        max_abs_diff(exp_series_scaled(a), want) / std::max(1.0, max_abs(want));
    const bool mixing_ok =
        std::abs(r.mixing.a_plus_sq - ex.a_plus_sq) <= 1e-12 * std::max(1.0, std::abs(ex.a_plus_sq)) &&
        std::abs(r.mixing.a_minus_sq - ex.a_minus_sq) <= 1e-12 * std::max(1.0, std::abs(ex.a_minus_sq));
    const bool ok = worst <= 1e-12 && series_err <= 1e-10 && mixing_ok;
    all_ok = all_ok && ok;
    std::printf("%s  example %d  Cl(%s)  closed rel err %.2e  series rel err %.2e  mixing %s\n",
                ok ? "PASS" : "FAIL", ex.number, ex.sig.to_string().c_str(), worst, series_err,
                mixing_ok ? "ok" : "mismatch");
  }
  return all_ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form exponentials of general multivectors in 3D Clifford algebras"};
  app.require_subcommand(1);

  ExpOptions exp_opt;
  auto* exp_cmd = app.add_subcommand("exp", "Exponential of a multivector");
  exp_cmd->add_option("--algebra", exp_opt.algebra, "Signature p,q: 0,3 | 3,0 | 1,2 | 2,1")->required();
  auto* mv_opt = exp_cmd->add_option("--mv", exp_opt.mv, "Multivector expression, e.g. \"1 - 2*e12 + e123\"");
  auto* file_opt = exp_cmd->add_option("--mv-file", exp_opt.mv_file, "File with one expression per line");
  mv_opt->excludes(file_opt);
  exp_cmd->add_option("--engine", exp_opt.engine, "closed | series | both")
      ->check(CLI::IsMember({"closed", "series", "both"}));
  auto* exp_json = exp_cmd->add_flag("--json", exp_opt.json, "One JSON object per evaluation");
  exp_cmd->add_flag("--text", "Human-readable output (default)")->excludes(exp_json);
  exp_cmd->add_option("--tol", exp_opt.tol, "Allowed scaled engine discrepancy in both mode");
  exp_cmd->add_option("--terms", exp_opt.terms, "Series term budget")->check(CLI::PositiveNumber);

  TrigOptions trig_opt;
  auto* trig_cmd = app.add_subcommand("trig", "cos, sin, cosh or sinh of a multivector");
  trig_cmd->add_option("--algebra", trig_opt.algebra, "Signature p,q")->required();
  trig_cmd->add_option("--mv", trig_opt.mv, "Multivector expression")->required();
  trig_cmd->add_option("--fn", trig_opt.fn, "cos | sin | cosh | sinh")
      ->check(CLI::IsMember({"cos", "sin", "cosh", "sinh"}));
  auto* trig_json = trig_cmd->add_flag("--json", trig_opt.json, "JSON output");
  trig_cmd->add_flag("--text", "Human-readable output (default)")->excludes(trig_json);
  trig_cmd->add_option("--terms", trig_opt.terms, "Series term budget")->check(CLI::PositiveNumber);

  OdeOptions ode_opt;
  auto* ode_cmd = app.add_subcommand("ode", "Solve dX/dt = A X [+ X B] [+ f]");
  ode_cmd->add_option("--algebra", ode_opt.algebra, "Signature p,q")->required();
  ode_cmd->add_option("--A", ode_opt.a, "Left coefficient A")->required();
  ode_cmd->add_option("--B", ode_opt.b, "Right coefficient B (two-sided system)");
  ode_cmd->add_option("--x0", ode_opt.x0, "Initial value X(0)")->required();
  ode_cmd->add_option("--t", ode_opt.t, "End time");
  ode_cmd->add_option("--samples", ode_opt.samples, "Number of evenly spaced output times in [0, t]");
  ode_cmd->add_option("--force", ode_opt.force, "Constant forcing term f");
  ode_cmd->add_option("--steps", ode_opt.steps, "Simpson intervals for the forcing integral")
      ->check(CLI::Range(2, 1 << 24));
  auto* ode_json = ode_cmd->add_flag("--json", ode_opt.json, "JSON lines output");
  ode_cmd->add_flag("--text", "Human-readable output (default)")->excludes(ode_json);

  auto* selftest_cmd = app.add_subcommand("selftest", "Check the seven reference exponentials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (exp_cmd->parsed()) {
      if (mv_opt->count() == 0 && file_opt->count() == 0) {
        throw CLI::RequiredError("--mv or --mv-file");
      }
      return run_exp(exp_opt);
    }
    if (trig_cmd->parsed()) return run_trig(trig_opt);
    if (ode_cmd->parsed()) return run_ode(ode_opt);
    if (selftest_cmd->parsed()) return run_selftest();
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kParse;
  } catch (const ParseError& e) {
    std::cerr << "cl3exp: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ConvergenceError& e) {
    std::cerr << "cl3exp: " << e.what() << '\n';
    return kConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "cl3exp: invalid input: " << e.what() << '\n';
    return kParse;
  } catch (const SingularError& e) {
    std::cerr << "cl3exp: " << e.what() << '\n';
    return kParse;
  }
  return kFailure;
}
