// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sunlie/adjoint.hpp"
#include "sunlie/cli.hpp"
#include "sunlie/dynamics.hpp"
#include "sunlie/generators.hpp"
#include "sunlie/structure_constants.hpp"
#include "sunlie/trace_oracle.hpp"

using namespace sunlie;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool ok = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// 1. Closed forms against the trace oracle, support and value.
Verdict oracle_equivalence() {
  Verdict v;
  double worst = 0.0;
  std::size_t compared = 0;
  const auto start = Clock::now();
  for (int n = 2; n <= 8; ++n) {
    for (auto kind : {ConstantKind::F, ConstantKind::D}) {
      const auto closed = build_table(n, kind);
      const auto oracle = full_oracle_table({n, 1.0}, kind, 8);
      for (const auto& t : closed.triples()) {
        const double ref = oracle.lookup(t.i, t.j, t.k);
        if (ref == 0.0) {
          v.ok = false;
          v.detail += " spurious " + format_row(kind, t);
          continue;
        }
        worst = std::max(worst, std::abs(ref - t.value));
        ++compared;
      }
      for (const auto& t : oracle.triples()) {
        if (closed.lookup(t.i, t.j, t.k) == 0.0) {
          v.ok = false;
          v.detail += " missing " + format_row(kind, t);
        }
      }
    }
  }
  v.ok = v.ok && worst <= 1e-12;
  v.detail = "N=2..8 f,d triples=" + std::to_string(compared) + " max|delta|=" + sci(worst) +
             " time=" + sci(elapsed(start)) + "s" + v.detail;
  return v;
}

// 2. Radical values for su(2) and su(3).
Verdict golden_values() {
  Verdict v;
  const double r3 = 1.0 / std::sqrt(3.0);
  const double h3 = std::sqrt(3.0) / 2.0;
  const std::vector<ConstantTriple> f3 = {
      {1, 2, 3, 1.0}, {1, 4, 7, 0.5},  {1, 5, 6, -0.5}, {2, 4, 6, 0.5}, {2, 5, 7, 0.5},
      {3, 4, 5, 0.5}, {3, 6, 7, -0.5}, {4, 5, 8, h3},   {6, 7, 8, h3},
  };
  const std::vector<ConstantTriple> d3 = {
      {1, 1, 8, r3},      {1, 4, 6, 0.5},     {1, 5, 7, 0.5},  {2, 2, 8, r3},      {2, 4, 7, -0.5},   {2, 5, 6, 0.5},
      {3, 3, 8, r3},      {3, 4, 4, 0.5},     {3, 5, 5, 0.5},  {3, 6, 6, -0.5},    {3, 7, 7, -0.5},   {4, 4, 8, -r3 / 2},
      {5, 5, 8, -r3 / 2}, {6, 6, 8, -r3 / 2}, {7, 7, 8, -r3 / 2}, {8, 8, 8, -r3},
  };
  double worst = 0.0;
  auto against = [&](const ConstantTable& table, const std::vector<ConstantTriple>& expected) {
    if (table.size() != expected.size()) {
      v.ok = false;
      v.detail += " size " + std::to_string(table.size());
      return;
    }
    for (std::size_t p = 0; p < expected.size(); ++p) {
      const auto& got = table.triples()[p];
      const auto& want = expected[p];
      if (got.i != want.i || got.j != want.j || got.k != want.k) {
        v.ok = false;
        v.detail += " support";
        return;
      }
      worst = std::max(worst, std::abs(got.value - want.value));
    }
  };
  const auto f2 = build_f_table(2);
  against(f2, {{1, 2, 3, 1.0}});
  if (build_d_table(2).size() != 0) v.ok = false;
  against(build_f_table(3), f3);
  against(build_d_table(3), d3);
  against(full_oracle_table({3, 1.0}, ConstantKind::F, 8), f3);
  against(full_oracle_table({3, 1.0}, ConstantKind::D, 8), d3);
  v.ok = v.ok && worst <= 1e-14;
  v.detail = "f_123, su(3) 9 f + 16 d (closed form and oracle) max|delta|=" + sci(worst) + v.detail;
  return v;
}

// 3. Permutation symmetry and the Jacobi identity.
Verdict symmetry_suites() {
  Verdict v;
  std::mt19937_64 rng(20240601);
  std::size_t perm_failures = 0;
  const int n_checks = 10000;
  std::vector<ConstantTable> f_tables, d_tables;
  for (int n = 2; n <= 8; ++n) {
    f_tables.push_back(build_f_table(n));
    d_tables.push_back(build_d_table(n));
  }
  for (int trial = 0; trial < n_checks; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto& f = f_tables[static_cast<std::size_t>(n - 2)];
    const auto& d = d_tables[static_cast<std::size_t>(n - 2)];
    std::uniform_int_distribution<int> pick(1, n * n - 1);
    std::array<int, 3> idx{pick(rng), pick(rng), pick(rng)};
    // Every other draw lands on a stored orbit so non-zero values are exercised.
    if (trial % 2 == 0) {
      const auto& table = (trial % 4 == 0 || d.size() == 0) ? f : d;
      const auto& t = table.triples()[rng() % table.size()];
      idx = {t.i, t.j, t.k};
      std::shuffle(idx.begin(), idx.end(), rng);
    }
    const double f0 = f.lookup(idx[0], idx[1], idx[2]);
    const double d0 = d.lookup(idx[0], idx[1], idx[2]);
    std::array<int, 3> perm{0, 1, 2};
    do {
      int inversions = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) inversions += perm[a] > perm[b];
      const double sign = inversions % 2 == 0 ? 1.0 : -1.0;
      if (f.lookup(idx[perm[0]], idx[perm[1]], idx[perm[2]]) != sign * f0) ++perm_failures;
      if (d.lookup(idx[perm[0]], idx[perm[1]], idx[perm[2]]) != d0) ++perm_failures;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  double jacobi = 0.0;
  const int n_quads = 1000;
  for (int n = 2; n <= 6; ++n) {
    const auto& f = f_tables[static_cast<std::size_t>(n - 2)];
    const int dim = n * n - 1;
    std::uniform_int_distribution<int> pick(1, dim);
    for (int trial = 0; trial < n_quads; ++trial) {
      const int i = pick(rng), j = pick(rng), k = pick(rng), l = pick(rng);
      double residual = 0.0;
      for (int m = 1; m <= dim; ++m) {
        residual += f.lookup(i, j, m) * f.lookup(m, k, l) + f.lookup(j, k, m) * f.lookup(m, i, l) +
                    f.lookup(k, i, m) * f.lookup(m, j, l);
      }
      jacobi = std::max(jacobi, std::abs(residual));
    }
  }
  v.ok = perm_failures == 0 && jacobi <= 1e-12;
  v.detail = std::to_string(n_checks) + " permutation checks, failures=" + std::to_string(perm_failures) + "; " +
             std::to_string(n_quads) + " Jacobi quadruples per N=2..6, max residual=" + sci(jacobi);
  return v;
}

// 4. Adjoint representation property.
Verdict adjoint_representation() {
  Verdict v;
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int n = 2; n <= 6; ++n) {
    const auto report = verify_adjoint_commutators(build_f_table(n), 0, 42, 1e-12);
    const auto full = static_cast<std::size_t>((n * n - 1) * (n * n - 1));
    v.ok = v.ok && report.passed && report.pairs_checked == full;
    worst = std::max(worst, report.max_deviation);
    pairs += report.pairs_checked;
  }
  const auto sampled = verify_adjoint_commutators(build_f_table(12), 200, 42, 1e-12);
  v.ok = v.ok && sampled.passed && sampled.pairs_checked == 200;
  worst = std::max(worst, sampled.max_deviation);
  v.detail = "exhaustive N=2..6 (" + std::to_string(pairs) + " pairs) + 200 pairs at N=12, max deviation=" + sci(worst);
  return v;
}

// 5. Cartan generators commute.
Verdict cartan_closure() {
  Verdict v;
  std::size_t lookups = 0, nonzero = 0;
  for (int n = 2; n <= 8; ++n) {
    const auto f = build_f_table(n);
    for (int a = 2; a <= n; ++a) {
      for (int b = 2; b <= n; ++b) {
        const int p = a * a - 1, q = b * b - 1;
        for (int k = 1; k < n * n; ++k) {
          for (double value : {f.lookup(p, q, k), f.lookup(p, k, q), f.lookup(k, p, q)}) {
            ++lookups;
            nonzero += value != 0.0;
          }
        }
      }
    }
  }
  v.ok = nonzero == 0;
  v.detail = "N=2..8 lookups=" + std::to_string(lookups) + " non-zero=" + std::to_string(nonzero);
  return v;
}

// 6. The three diagonal identities behind the Cartan-coupled constants.
Verdict diagonal_identities() {
  Verdict v;
  double worst = 0.0;
  std::size_t cases = 0;
  auto check = [&](const AlgebraConfig& cfg, const ComplexMatrix& lhs, double identity,
                   const std::function<double(int)>& coefficient) {
    DiagonalDecomposition expected;
    expected.identity = identity;
    for (int k = 2; k <= cfg.n_dim; ++k) expected.cartan.push_back(coefficient(k));
    const auto parts = decompose_diagonal(cfg, lhs);
    double dev = std::abs(parts.identity - identity);
    for (int k = 2; k <= cfg.n_dim; ++k) dev = std::max(dev, std::abs(parts.coefficient(k) - coefficient(k)));
    dev = std::max(dev, (compose_diagonal(cfg, expected) - lhs).cwiseAbs().maxCoeff());
    dev = std::max(dev, (compose_diagonal(cfg, parts) - lhs).cwiseAbs().maxCoeff());
    worst = std::max(worst, dev);
    ++cases;
  };
  for (double hbar : {1.0, 2.0}) {
    for (int n_dim = 2; n_dim <= 10; ++n_dim) {
      const AlgebraConfig cfg{n_dim, hbar};
      const double h2 = hbar * hbar;
      for (int n = 2; n <= n_dim; ++n) {
        const double dn = n;
        for (int m = 1; m < n; ++m) {
          const double dm = m;
          auto lower = [&](int k) {
            const double dk = k;
            if (k > m && k < n) return hbar / std::sqrt(2 * dk * (dk - 1));
            if (k == m) return -hbar * std::sqrt((dm - 1) / (2 * dm));
            return 0.0;
          };
          ComplexMatrix diff = ComplexMatrix::Zero(n_dim, n_dim);
          diff(m - 1, m - 1) = h2 / 2;
          diff(n - 1, n - 1) = -h2 / 2;
          check(cfg, diff, 0.0, [&](int k) { return k == n ? hbar * std::sqrt(dn / (2 * (dn - 1))) : lower(k); });

          ComplexMatrix sum = ComplexMatrix::Zero(n_dim, n_dim);
          sum(m - 1, m - 1) = h2 / 2;
          sum(n - 1, n - 1) = h2 / 2;
          check(cfg, sum, h2 / n_dim, [&](int k) {
            const double dk = k;
            if (k > n) return hbar * std::sqrt(2 / (dk * (dk - 1)));
            if (k == n) return hbar * (2 - dn) / std::sqrt(2 * dn * (dn - 1));
            return lower(k);
          });
        }
        ComplexMatrix square = ComplexMatrix::Zero(n_dim, n_dim);
        for (int k = 0; k < n - 1; ++k) square(k, k) = h2 / (dn * (dn - 1));
        square(n - 1, n - 1) = h2 / (dn * (dn - 1)) * (1 - dn) * (1 - dn);
        check(cfg, square, h2 / n_dim, [&](int k) {
          const double dk = k;
          if (k > n) return hbar * std::sqrt(2 / (dk * (dk - 1)));
          if (k == n) return hbar * (2 - dn) * std::sqrt(2 / (dn * (dn - 1)));
          return 0.0;
        });
      }
    }
  }
  v.ok = worst <= 1e-13;
  v.detail = std::to_string(cases) + " decompositions for N=2..10, hbar in {1,2}, max deviation=" + sci(worst);
  return v;
}

// 7. Precession equation against the amplitude equation.
Verdict dynamics_equivalence() {
  Verdict v;
  double worst = 0.0, drift = 0.0;
  int runs = 0;
  const auto start = Clock::now();
  for (int n = 2; n <= 6; ++n) {
    const AlgebraConfig cfg{n, 1.0};
    const auto f = build_f_table(n);
    for (int seed = 0; seed < 20; ++seed) {
      std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * n + seed));
      const ComplexMatrix h = random_gue_hamiltonian(n, rng);
      const StateVector psi0 = random_state(n, rng);
      IntegrationSpec spec;
      spec.t_final = 10.0;
      spec.dt = 1e-3;
      spec.method = IntegrationMethod::RK4;
      const auto bloch = integrate_bloch(f, decompose_hamiltonian(cfg, h), state_to_bloch(cfg, psi0), spec);
      const auto amps = integrate_tdse(cfg, h, psi0, spec);
      if (bloch.size() != amps.size()) {
        v.ok = false;
        continue;
      }
      const double c0 = casimir(bloch.front().s);
      for (std::size_t p = 0; p < bloch.size(); ++p) {
        const auto image = state_to_bloch(cfg, amps[p].c, 1e-6);
        worst = std::max(worst, (image.s - bloch[p].s).cwiseAbs().maxCoeff());
        drift = std::max(drift, std::abs(casimir(bloch[p].s) - c0));
      }
      ++runs;
    }
  }
  v.ok = v.ok && runs == 100 && worst <= 1e-6 && drift <= 1e-8;
  v.detail = std::to_string(runs) + " runs (20 per N=2..6, t=0..10, RK4 dt=1e-3) max deviation=" + sci(worst) +
             " casimir drift=" + sci(drift) + " time=" + sci(elapsed(start)) + "s";
  return v;
}

// 8. Closed-form speed and oracle refusal.
Verdict performance() {
  Verdict v;
  const auto start = Clock::now();
  const auto f = build_f_table(64);
  const auto d = build_d_table(64);
  const double big = elapsed(start);

  std::ostringstream out, err;
  const int code = cli::run({"bench", "--n", "64", "--repeats", "1"}, out, err);
  const bool refused = code == cli::kOk && out.str().find("oracle: refused (") != std::string::npos &&
                       out.str().find("estimated") != std::string::npos;

  const auto small = cli::run_bench({6, 1.0}, 5, 8);
  const double speedup = small.oracle_seconds ? *small.oracle_seconds / std::max(small.closed_form_seconds, 1e-9) : 0.0;

  v.ok = big <= 5.0 && refused && speedup >= 100.0;
  v.detail = "N=64 f+d (" + std::to_string(f.size() + d.size()) + " triples) in " + sci(big) +
             "s; bench N=64 oracle " + (refused ? "refused with estimate" : "NOT refused") + "; N=6 speedup " +
             sci(speedup) + "x";
  return v;
}

// 9. Byte-identical tables against the committed golden files.
Verdict reproducibility() {
  Verdict v;
  for (int n : {2, 3, 4}) {
    const std::string path = std::string(SUNLIE_GOLDEN_DIR) + "/constants_n" + std::to_string(n) + ".csv";
    std::ifstream file(path, std::ios::binary);
    std::stringstream golden;
    golden << file.rdbuf();
    std::ostringstream out, err;
    const int code = cli::run({"constants", "--n", std::to_string(n), "--kind", "both", "--format", "csv"}, out, err);
    const bool same = file.good() && code == cli::kOk && out.str() == golden.str();
    v.ok = v.ok && same;
    v.detail += " N=" + std::to_string(n) + (same ? " identical" : " DIFFERS");
  }
  v.detail.erase(0, 1);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"su(2)/su(3) golden values", golden_values},
      {"symmetry suites", symmetry_suites},
      {"adjoint representation", adjoint_representation},
      {"Cartan closure", cartan_closure},
      {"diagonal identities", diagonal_identities},
      {"dynamics equivalence", dynamics_equivalence},
      {"performance", performance},
      {"reproducibility", reproducibility},
  };
  int failures = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Verdict verdict;
    try {
      verdict = criteria[c].second();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    failures += !verdict.ok;
    std::cout << (verdict.ok ? "PASS " : "FAIL ") << c + 1 << " " << criteria[c].first << ": " << verdict.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
