#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "fbc/bounds.hpp"
#include "fbc/codecheck.hpp"
#include "fbc/counting.hpp"
#include "fbc/errors.hpp"
#include "fbc/matrix_file.hpp"
#include "fbc/table_csv.hpp"

namespace fbc::cli {

namespace {

struct ThetaArgs {
  int n = 0;
  int t = 0;
  int r = 0;
  std::string method = "rec";
};

struct MinnArgs {
  int k = 0;
  int t = 0;
  std::optional<int> r;
  std::string bound;
};

struct TableArgs {
  int which = 0;
  std::string out;
  int k_max = 7;
  int k_lo = 5;
  int k_hi = 15;
};

struct VerifyArgs {
  std::string matrix;
  std::string construct;
  int t = 0;
  int r = 0;
  int jobs = 1;
  std::optional<double> budget_seconds;
  std::optional<std::uint64_t> budget_batches;
  bool deterministic = false;
  bool no_screen = false;
  bool pretty = false;
};

struct ConstructArgs {
  std::string which;
  int k = 0;
  std::string out;
};

int cmd_theta(const ThetaArgs& a, std::ostream& out) {
  if (a.n < 0 || a.t < 0 || a.r < 1) throw ParameterError("need n >= 0, t >= 0, r >= 1");
  Count value;
  if (a.method == "direct") {
    value = theta_direct(a.n, a.t, a.r);
  } else if (a.method == "egf") {
    value = theta_egf(a.n, a.t, a.r);
  } else {
    ThetaMemo memo(a.r);
    value = theta_rec(memo, a.n, a.t);
  }
  out << value << '\n';
  return kOk;
}

std::string describe(const BoundOutcome& o) {
  std::ostringstream s;
  s << io::format_cell(io::TableCell::from_outcome(o)) << "\tbound=" << bound_name(o.id)
    << " raw=" << o.raw_min_n << " floor=" << o.applicability_floor;
  if (o.n_estimate) s << " estimate=" << std::setprecision(10) << *o.n_estimate;
  if (o.clamped) s << " clamped";
  if (o.vacuous) s << " vacuous";
  return s.str();
}

int cmd_minn(const MinnArgs& a, std::ostream& out, std::ostream& err) {
  const auto id = parse_bound_name(a.bound);
  if (!id) throw CLI::ValidationError("--bound", "unknown bound \"" + a.bound + "\"");
  if (*id == BoundId::kThm8 || *id == BoundId::kBaseline23) {
    if (a.r) err << "warning: --r is ignored by the " << a.bound << " bound\n";
    const auto o = *id == BoundId::kThm8 ? min_n_thm8(a.k, a.t) : min_n_baseline23(a.k, a.t);
    out << describe(o) << '\n';
    return kOk;
  }
  if (!a.r) throw CLI::RequiredError("--r is required for the " + a.bound + " bound");
  const CodeParams p(a.k, a.t, *a.r);
  if (*id == BoundId::kExactTheta) {
    out << min_n_exact(p) << "\tbound=exact\n";
    return kOk;
  }
  out << describe(min_n_closed_form(*id, p)) << '\n';
  return kOk;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed for " + path);
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  io::CsvTable table;
  if (a.which == 2) {
    table = io::table2_csv(emit_table2(a.k_max));
  } else {
    const auto cols = default_table3_columns();
    table = io::table3_csv(emit_table3(a.k_lo, a.k_hi, cols), cols);
  }
  emit(a.out, io::format_csv(table), out);
  return kOk;
}

GeneratorMatrix construct_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParameterError("--construct expects simplex:K or double:K");
  const std::string kind = spec.substr(0, colon);
  int k = 0;
  try {
    std::size_t used = 0;
    k = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw ParameterError("bad dimension in --construct " + spec);
  }
  if (kind == "simplex") return simplex(k);
  if (kind == "double") return double_simplex(k);
  throw ParameterError("unknown construction \"" + kind + "\"");
}

std::string format_query(std::uint32_t w, int k, bool pretty) {
  if (!pretty) return std::to_string(w);
  std::string s = "(";
  for (int i = 0; i < k; ++i) {
    if (i) s += ',';
    s += ((w >> i) & 1u) ? '1' : '0';
  }
  return s + ")";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const GeneratorMatrix g = a.matrix.empty() ? construct_from_spec(a.construct) : io::read_matrix_file(a.matrix);

  VerifyOptions opts;
  opts.jobs = a.jobs;
  opts.deterministic = a.deterministic;
  opts.uniform_screen = !a.no_screen;
  std::optional<double> budget = a.budget_seconds;
  if (!budget) {
    if (const char* env = std::getenv("FBC_BUDGET_SECONDS"); env && *env) {
      try {
        budget = std::stod(env);
      } catch (const std::exception&) {
        throw ParameterError("FBC_BUDGET_SECONDS is not a number");
      }
    }
  }
  if (budget) opts.time_budget = std::chrono::duration<double>(*budget);
  opts.batch_budget = a.budget_batches;

  const Verdict v = verify(g, a.t, a.r, opts);
  std::ostringstream stats;
  stats << "# n=" << g.n() << " k=" << g.k() << " t=" << a.t << " r=" << a.r << ": checked "
        << v.assignments_checked << " batches";
  if (v.batches_total) stats << " (sweep size " << *v.batches_total << ")";
  stats << " in " << std::fixed << std::setprecision(3) << v.wall_time.count() << " s";

  switch (v.status) {
    case VerdictStatus::kHolds:
      out << "holds\n" << stats.str() << '\n';
      return kOk;
    case VerdictStatus::kFails: {
      out << "fails\n";
      const auto words = v.counterexample->words();
      for (std::size_t i = 0; i < words.size(); ++i) {
        out << (i ? " " : "") << format_query(words[i], g.k(), a.pretty);
      }
      out << '\n' << stats.str() << '\n';
      return kFalsified;
    }
    case VerdictStatus::kUndecided:
      out << "undecided\n" << stats.str() << " (budget exhausted)\n";
      return kUndecided;
  }
  return kUndecided;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const GeneratorMatrix g = a.which == "double" ? double_simplex(a.k) : simplex(a.k);
  emit(a.out, io::format_matrix(g), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Functional batch code laboratory: labelling counts, length bounds, verification"};
  app.name("fbc");
  app.require_subcommand(1);

  ThetaArgs theta;
  auto* theta_cmd = app.add_subcommand("theta", "Number of bounded labellings theta_{t,r}(n)");
  theta_cmd->add_option("--n", theta.n, "Code length")->required();
  theta_cmd->add_option("--t", theta.t, "Batch size")->required();
  theta_cmd->add_option("--r", theta.r, "Locality")->required();
  theta_cmd->add_option("--method", theta.method, "direct | rec | egf")
      ->check(CLI::IsMember({"direct", "rec", "egf"}));

  MinnArgs minn;
  auto* minn_cmd = app.add_subcommand("minn", "Smallest code length allowed by a lower bound");
  minn_cmd->add_option("--k", minn.k, "Dimension")->required();
  minn_cmd->add_option("--t", minn.t, "Batch size")->required();
  minn_cmd->add_option("--r", minn.r, "Locality");
  minn_cmd->add_option("--bound", minn.bound, "exact | thm6 | cor1 | thm7 | thm8 | baseline")->required();

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Emit a bound table as CSV");
  table_cmd->add_option("--which", table.which, "2 (r=2 comparison) or 3 (locality bounds)")
      ->required()
      ->check(CLI::IsMember({2, 3}));
  table_cmd->add_option("--out", table.out, "Output file (default stdout)");
  table_cmd->add_option("--k-max", table.k_max, "Last k for table 2")->check(CLI::Range(2, 10));
  table_cmd->add_option("--k-lo", table.k_lo, "First k for table 3")->check(CLI::Range(1, 24));
  table_cmd->add_option("--k-hi", table.k_hi, "Last k for table 3")->check(CLI::Range(1, 24));

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively check the functional batch property");
  auto* m_opt = verify_cmd->add_option("--matrix", ver.matrix, "Generator matrix file");
  auto* c_opt = verify_cmd->add_option("--construct", ver.construct, "simplex:K or double:K");
  m_opt->excludes(c_opt);
  verify_cmd->add_option("--t", ver.t, "Batch size")->required();
  verify_cmd->add_option("--r", ver.r, "Locality")->required();
  verify_cmd->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget-seconds", ver.budget_seconds, "Wall-clock budget");
  verify_cmd->add_option("--budget-batches", ver.budget_batches, "Maximum batches to check");
  verify_cmd->add_flag("--deterministic", ver.deterministic, "Report the lexicographically first counterexample");
  verify_cmd->add_flag("--no-screen", ver.no_screen, "Skip the uniform-batch pre-screen");
  verify_cmd->add_flag("--pretty", ver.pretty, "Print counterexample queries as bit vectors");

  ConstructArgs cons;
  auto* construct_cmd = app.add_subcommand("construct", "Write a simplex or double-simplex generator matrix");
  construct_cmd->add_option("--which", cons.which, "simplex | double")
      ->required()
      ->check(CLI::IsMember({"simplex", "double"}));
  construct_cmd->add_option("--k", cons.k, "Dimension")->required();
  construct_cmd->add_option("--out", cons.out, "Output file (default stdout)");

  std::vector<const char*> argv{"fbc"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (verify_cmd->parsed() && ver.matrix.empty() == ver.construct.empty()) {
      throw CLI::ValidationError("verify", "exactly one of --matrix or --construct is required");
    }
    if (theta_cmd->parsed()) return cmd_theta(theta, out);
    if (minn_cmd->parsed()) return cmd_minn(minn, out, err);
    if (table_cmd->parsed()) return cmd_table(table, out);
    if (verify_cmd->parsed()) return cmd_verify(ver, out);
    if (construct_cmd->parsed()) return cmd_construct(cons, out);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::Error& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const ParseError& e) {
    err << "fbc: " << e.what() << '\n';
    return kDataError;
  } catch (const IoError& e) {
    err << "fbc: " << e.what() << '\n';
    return kIoError;
  } catch (const ParameterError& e) {
    err << "fbc: " << e.what() << '\n';
    return kUsage;
  } catch (const ApplicabilityError& e) {
    err << "fbc: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace fbc::cli
