#include "sunlie/adjoint.hpp"

#include <optional>
#include <random>
#include <stdexcept>

namespace sunlie {

AdjointMatrix adjoint_matrix(const ConstantTable& f_table, int i) {
  if (f_table.kind() != ConstantKind::F) throw std::invalid_argument("adjoint_matrix needs an f table");
  const int dim = algebra_dimension(f_table.n_dim());
  validate_index(i, f_table.n_dim());

  const Complex minus_i(0.0, -1.0);
  ComplexMatrix t = ComplexMatrix::Zero(dim, dim);
  // Each stored orbit (a < b < c, f_abc = v) touches T_a, T_b and T_c.
  auto place = [&](int row, int col, double f_value) {
    t(row - 1, col - 1) = minus_i * f_value;
    t(col - 1, row - 1) = -minus_i * f_value;
  };
  for (const auto& c : f_table.triples()) {
    if (c.i == i) place(c.j, c.k, c.value);   // f_{i j k} = v
    if (c.j == i) place(c.i, c.k, -c.value);  // f_{j i k} = -v
    if (c.k == i) place(c.i, c.j, c.value);   // f_{k i j} = v
  }
  return {i, std::move(t)};
}

AdjointReport verify_adjoint_commutators(const ConstantTable& f_table, std::size_t sampled_pairs, std::uint64_t seed,
                                         double tolerance) {
  if (f_table.kind() != ConstantKind::F) {
    throw std::invalid_argument("verify_adjoint_commutators needs an f table");
  }
  const int dim = algebra_dimension(f_table.n_dim());
  std::vector<std::optional<ComplexMatrix>> cache(static_cast<std::size_t>(dim));
  auto generator = [&](int idx) -> const ComplexMatrix& {
    auto& slot = cache[static_cast<std::size_t>(idx - 1)];
    if (!slot) slot = adjoint_matrix(f_table, idx).entries;
    return *slot;
  };

  AdjointReport report;
  auto check = [&](int i, int j) {
    const ComplexMatrix& ti = generator(i);
    const ComplexMatrix& tj = generator(j);
    ComplexMatrix residual = ti * tj - tj * ti;
    for (int k = 1; k <= dim; ++k) {
      const double f = f_table.lookup(i, j, k);
      if (f != 0.0) residual -= Complex(0.0, f) * generator(k);
    }
    const double deviation = residual.cwiseAbs().maxCoeff();
    ++report.pairs_checked;
    if (deviation > report.max_deviation || report.pairs_checked == 1) {
      report.max_deviation = deviation;
      report.worst_i = i;
      report.worst_j = j;
    }
  };

  if (sampled_pairs == 0) {
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) check(i, j);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, dim);
    for (std::size_t p = 0; p < sampled_pairs; ++p) {
      const int i = pick(rng);
      const int j = pick(rng);
      check(i, j);
    }
  }
  report.passed = report.max_deviation <= tolerance;
  return report;
}

}  // namespace sunlie
