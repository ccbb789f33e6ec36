#pragma once

#include <cstdint>
#include <vector>

#include "sunlie/generators.hpp"
#include "sunlie/structure_constants.hpp"

namespace sunlie {

/// Adjoint-representation generator T_i with [T_i]_jk = -i f_ijk.
struct AdjointMatrix {
  int index = 0;
  ComplexMatrix entries;
};

/// Builds T_i from an f table. Throws std::invalid_argument for a d table and
/// std::domain_error for an out-of-range index.
AdjointMatrix adjoint_matrix(const ConstantTable& f_table, int i);

struct AdjointReport {
  std::size_t pairs_checked = 0;
  double max_deviation = 0.0;
  int worst_i = 0;
  int worst_j = 0;
  bool passed = false;
};

/**
 * Checks [T_i, T_j] = i sum_k f_ijk T_k.
 *
 * With `sampled_pairs` == 0 every ordered pair (i, j) is checked; otherwise
 * that many pairs are drawn uniformly with the given seed. `passed` is
 * max_deviation <= tolerance.
 */
AdjointReport verify_adjoint_commutators(const ConstantTable& f_table, std::size_t sampled_pairs = 0,
                                         std::uint64_t seed = 42, double tolerance = 1e-12);

}  // namespace sunlie
