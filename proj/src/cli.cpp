#include "sunlie/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sunlie/adjoint.hpp"
#include "sunlie/dynamics.hpp"
#include "sunlie/indexing.hpp"
#include "sunlie/io.hpp"
#include "sunlie/structure_constants.hpp"
#include "sunlie/trace_oracle.hpp"

namespace sunlie::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Raised inside subcommands for input problems that should end in kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<ConstantKind> kinds_for(const std::string& kind) {
  if (kind == "f") return {ConstantKind::F};
  if (kind == "d") return {ConstantKind::D};
  return {ConstantKind::F, ConstantKind::D};
}

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  try {
    return nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

int resolve_index(const std::string& label, int index, int n_dim) {
  if (!label.empty()) {
    try {
      return label_to_index(parse_label(label), n_dim);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  try {
    validate_index(index, n_dim);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return index;
}

// Support and value comparison of one closed-form table against the oracle.
struct TableDiff {
  std::vector<std::string> problems;
  double max_delta = 0.0;
};

TableDiff diff_tables(const ConstantTable& closed, const ConstantTable& oracle, double tol) {
  TableDiff diff;
  const auto kind = std::string(to_string(closed.kind()));
  auto tag = [&](const ConstantTriple& t) {
    return kind + "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
  };
  for (const auto& t : closed.triples()) {
    const double ref = oracle.lookup(t.i, t.j, t.k);
    if (ref == 0.0) {
      diff.problems.push_back("spurious " + tag(t) + " closed-form=" + format_value(t.value));
      continue;
    }
    const double delta = std::abs(t.value - ref);
    diff.max_delta = std::max(diff.max_delta, delta);
    if (delta > tol) {
      diff.problems.push_back("value " + tag(t) + " closed-form=" + format_value(t.value) +
                              " oracle=" + format_value(ref) + " delta=" + sci(delta));
    }
  }
  for (const auto& t : oracle.triples()) {
    if (closed.lookup(t.i, t.j, t.k) == 0.0) {
      diff.problems.push_back("missing " + tag(t) + " oracle=" + format_value(t.value));
    }
  }
  return diff;
}

void add_n_option(CLI::App* cmd, int& n_dim) {
  cmd->add_option("--n", n_dim, "Dimension N of su(N)")
      ->required()
      ->check(CLI::Validator(
          [](std::string& text) -> std::string {
            int value = 0;
            try {
              std::size_t used = 0;
              value = std::stoi(text, &used);
              if (used != text.size()) return "N must be an integer";
            } catch (const std::exception&) {
              return "N must be an integer";
            }
            return value >= 2 ? std::string() : std::string("N must be ≥ 2");
          },
          "N>=2"));
}

void add_hbar_option(CLI::App* cmd, double& hbar) {
  cmd->add_option("--hbar", hbar, "Value of hbar used to scale the generators")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

BenchResult run_bench(const AlgebraConfig& cfg, int repeats, int ceiling) {
  cfg.validate();
  BenchResult result;
  result.n_dim = cfg.n_dim;
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = Clock::now();
    const auto f = build_f_table(cfg.n_dim);
    const auto d = build_d_table(cfg.n_dim);
    best = std::min(best, seconds_since(start));
    result.f_count = f.size();
    result.d_count = d.size();
  }
  result.closed_form_seconds = best;

  if (cfg.n_dim > ceiling) {
    result.refusal = OracleRefused(cfg.n_dim, ceiling, 2.0 * oracle_cost_estimate(cfg.n_dim)).what();
    return result;
  }
  const auto start = Clock::now();
  const auto f = full_oracle_table(cfg, ConstantKind::F, ceiling);
  const auto d = full_oracle_table(cfg, ConstantKind::D, ceiling);
  result.oracle_seconds = seconds_since(start);
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sunlie: generalized Gell-Mann generators and su(N) structure constants", "sunlie"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  AlgebraConfig cfg;
  std::string kind = "both";
  std::string format = "csv";
  std::string output;
  std::string label;
  int index = 0;
  double tol = 1e-12;
  std::uint64_t seed = 42;

  // generators
  auto* gen_cmd = app.add_subcommand("generators", "Print generator matrices as JSON");
  add_n_option(gen_cmd, cfg.n_dim);
  add_hbar_option(gen_cmd, cfg.hbar);
  auto* gen_label = gen_cmd->add_option("--label", label, "Generator label, e.g. S(3,1), A(3,1), D(3)");
  auto* gen_index = gen_cmd->add_option("--index", index, "1-based generator index");
  gen_label->excludes(gen_index);
  gen_cmd->add_option("--output", output, "Write to this file instead of stdout");

  // constants
  auto* const_cmd = app.add_subcommand("constants", "Write the closed-form structure constant tables");
  add_n_option(const_cmd, cfg.n_dim);
  const_cmd->add_option("--kind", kind, "Which constants")->check(CLI::IsMember({"f", "d", "both"}))->capture_default_str();
  const_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  const_cmd->add_option("--output", output, "Write to this file instead of stdout");

  // verify
  bool check_adjoint = false;
  std::size_t adjoint_pairs = 200;
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed-form tables with the trace oracle");
  add_n_option(verify_cmd, cfg.n_dim);
  add_hbar_option(verify_cmd, cfg.hbar);
  verify_cmd->add_option("--kind", kind, "Which constants")->check(CLI::IsMember({"f", "d", "both"}))->capture_default_str();
  verify_cmd->add_option("--tol", tol, "Absolute value tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--adjoint", check_adjoint, "Also check the adjoint representation on sampled pairs");
  verify_cmd->add_option("--adjoint-pairs", adjoint_pairs, "Pairs sampled by --adjoint")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();

  // adjoint
  auto* adj_cmd = app.add_subcommand("adjoint", "Print an adjoint-representation matrix as JSON");
  add_n_option(adj_cmd, cfg.n_dim);
  auto* adj_label = adj_cmd->add_option("--label", label, "Generator label, e.g. D(3)");
  auto* adj_index = adj_cmd->add_option("--index", index, "1-based generator index");
  adj_label->excludes(adj_index);
  adj_cmd->add_option("--output", output, "Write to this file instead of stdout");

  // simulate
  std::string ham_path;
  std::string init_path;
  std::string method = "rk4";
  bool compare_tdse = false;
  IntegrationSpec spec;
  spec.t_final = 10.0;
  auto* sim_cmd = app.add_subcommand("simulate", "Integrate the su(N) precession equation");
  add_hbar_option(sim_cmd, cfg.hbar);
  sim_cmd->add_option("--hamiltonian", ham_path, "Hermitian matrix JSON {\"n\",\"re\",\"im\"}")
      ->required()
      ->check(CLI::ExistingFile);
  sim_cmd->add_option("--initial", init_path, "Initial state JSON {\"re\",\"im\"}")->required()->check(CLI::ExistingFile);
  sim_cmd->add_option("--t-final", spec.t_final, "Final time")->capture_default_str()->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--dt", spec.dt, "Time step (RK4) or output spacing unit (RK45)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--method", method, "Integrator")->check(CLI::IsMember({"rk4", "rk45"}))->capture_default_str();
  sim_cmd->add_option("--stride", spec.output_stride, "Steps between written samples")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--atol", spec.abs_tol, "RK45 absolute tolerance")->capture_default_str();
  sim_cmd->add_option("--rtol", spec.rel_tol, "RK45 relative tolerance")->capture_default_str();
  sim_cmd->add_option("--output", output, "Trajectory CSV (t,s_1..s_D); stdout if omitted");
  sim_cmd->add_flag("--compare-tdse", compare_tdse, "Also integrate the amplitudes and report the max deviation");

  // bench
  int repeats = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Time closed-form generation against the trace oracle");
  add_n_option(bench_cmd, cfg.n_dim);
  bench_cmd->add_option("--repeats", repeats, "Closed-form repetitions (best is reported)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      nlohmann::json doc;
      if (gen_label->count() || gen_index->count()) {
        const int i = resolve_index(label, index, cfg.n_dim);
        doc = io::matrix_to_json(make_generator(cfg, index_to_label(i, cfg.n_dim)));
        doc["index"] = i;
        doc["label"] = to_string(index_to_label(i, cfg.n_dim));
      } else {
        doc["n"] = cfg.n_dim;
        doc["generators"] = nlohmann::json::array();
        const auto gens = all_generators(cfg);
        for (int i = 1; i <= algebra_dimension(cfg.n_dim); ++i) {
          auto entry = io::matrix_to_json(gens[static_cast<std::size_t>(i - 1)]);
          entry["index"] = i;
          entry["label"] = to_string(index_to_label(i, cfg.n_dim));
          doc["generators"].push_back(std::move(entry));
        }
      }
      if (output.empty()) {
        out << doc.dump() << '\n';
      } else {
        open_output(output) << doc.dump() << '\n';
      }
      return kOk;
    }

    if (const_cmd->parsed()) {
      std::vector<ConstantTable> tables;
      for (auto k : kinds_for(kind)) tables.push_back(build_table(cfg.n_dim, k));
      std::ostringstream body;
      if (format == "csv") {
        io::write_constants_csv(body, tables);
      } else {
        body << io::constants_to_json(tables).dump(1) << '\n';
      }
      // Stats go to stdout only when the table itself went to a file.
      std::ostream& stats_stream = output.empty() ? err : out;
      if (output.empty()) {
        out << body.str();
      } else {
        open_output(output) << body.str();
      }
      for (const auto& t : tables) {
        const auto stats = table_stats(t);
        stats_stream << "# " << to_string(t.kind()) << ": N=" << cfg.n_dim << " count=" << stats.count
                     << " checksum=" << stats.checksum << '\n';
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      bool ok = true;
      for (auto k : kinds_for(kind)) {
        const auto closed = build_table(cfg.n_dim, k);
        const auto oracle = full_oracle_table(cfg, k);
        const auto diff = diff_tables(closed, oracle, tol);
        out << to_string(k) << ": N=" << cfg.n_dim << " closed-form=" << closed.size() << " oracle=" << oracle.size()
            << " max|delta|=" << sci(diff.max_delta) << (diff.problems.empty() ? " OK" : " MISMATCH") << '\n';
        for (const auto& p : diff.problems) out << "  " << p << '\n';
        ok = ok && diff.problems.empty();
      }
      if (check_adjoint) {
        const auto report = verify_adjoint_commutators(build_f_table(cfg.n_dim), adjoint_pairs, seed, tol);
        out << "adjoint: pairs=" << report.pairs_checked << " max deviation=" << sci(report.max_deviation)
            << (report.passed ? " OK" : " MISMATCH") << '\n';
        ok = ok && report.passed;
      }
      return ok ? kOk : kMismatch;
    }

    if (adj_cmd->parsed()) {
      if (!adj_label->count() && !adj_index->count()) throw UsageError("adjoint needs --index or --label");
      const int i = resolve_index(label, index, cfg.n_dim);
      auto doc = io::matrix_to_json(adjoint_matrix(build_f_table(cfg.n_dim), i).entries);
      doc["index"] = i;
      doc["label"] = to_string(index_to_label(i, cfg.n_dim));
      if (output.empty()) {
        out << doc.dump() << '\n';
      } else {
        open_output(output) << doc.dump() << '\n';
      }
      return kOk;
    }

    if (sim_cmd->parsed()) {
      spec.method = method == "rk45" ? IntegrationMethod::RK45 : IntegrationMethod::RK4;
      ComplexMatrix hamiltonian;
      StateVector psi0;
      try {
        hamiltonian = io::matrix_from_json(read_json(ham_path));
        psi0 = io::state_from_json(read_json(init_path));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      cfg.n_dim = static_cast<int>(hamiltonian.rows());
      if (psi0.size() != hamiltonian.rows()) {
        throw UsageError("initial state has " + std::to_string(psi0.size()) + " amplitudes, Hamiltonian is " +
                         std::to_string(hamiltonian.rows()) + "x" + std::to_string(hamiltonian.rows()));
      }
      HamiltonianCoefficients coeffs;
      BlochVector s0;
      try {
        coeffs = decompose_hamiltonian(cfg, hamiltonian);
        s0 = state_to_bloch(cfg, psi0);
      } catch (const std::domain_error& e) {
        throw UsageError(e.what());
      }
      const auto f_table = build_f_table(cfg.n_dim);
      const auto traj = integrate_bloch(f_table, coeffs, s0, spec);

      std::ostream& report = output.empty() ? err : out;
      if (output.empty()) {
        io::write_trajectory_csv(out, traj);
      } else {
        auto file = open_output(output);
        io::write_trajectory_csv(file, traj);
      }
      const double drift = std::abs(casimir(traj.back().s) - casimir(traj.front().s));
      report << "# samples=" << traj.size() << " casimir_drift=" << sci(drift) << '\n';

      if (compare_tdse) {
        const auto amps = integrate_tdse(cfg, hamiltonian, psi0, spec);
        double worst = 0.0;
        for (std::size_t p = 0; p < traj.size() && p < amps.size(); ++p) {
          const auto image = state_to_bloch(cfg, amps[p].c, 1e-6);
          worst = std::max(worst, (image.s - traj[p].s).cwiseAbs().maxCoeff());
        }
        report << "# tdse_max_deviation=" << sci(worst) << '\n';
      }
      return kOk;
    }

    if (bench_cmd->parsed()) {
      const int ceiling = oracle_ceiling();
      const auto result = run_bench(cfg, repeats, ceiling);
      out << "N=" << result.n_dim << " f=" << result.f_count << " d=" << result.d_count << '\n';
      out << "closed-form: " << sci(result.closed_form_seconds) << " s\n";
      if (result.oracle_seconds) {
        out << "oracle: " << sci(*result.oracle_seconds) << " s\n";
        out << "speedup: " << sci(*result.oracle_seconds / std::max(result.closed_form_seconds, 1e-9)) << "x\n";
      } else {
        out << "oracle: refused (" << result.refusal << ")\n";
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace sunlie::cli
