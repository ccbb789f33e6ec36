#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "sunlie/indexing.hpp"

namespace sunlie {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

/// Dimension N of the fundamental representation and the value of hbar used
/// to scale the generators.
struct AlgebraConfig {
  int n_dim = 2;
  double hbar = 1.0;

  /// Throws std::domain_error if n_dim < 2 or hbar is not a positive finite number.
  void validate() const;
};

/**
 * Generalized Gell-Mann generator for `label`, padded with zeros to N x N.
 *
 *   S(n,m) = (hbar/2)  (|m><n| + |n><m|)
 *   A(n,m) = (-i hbar/2)(|m><n| - |n><m|)
 *   D(n)   = hbar/sqrt(2n(n-1)) (sum_{k<n} |k><k| + (1-n)|n><n|)
 *
 * Entries are written directly, so Hermiticity holds bit for bit.
 */
ComplexMatrix make_generator(const AlgebraConfig& cfg, const GeneratorLabel& label);

/// All N^2 - 1 generators; element i-1 is the generator with linear index i.
std::vector<ComplexMatrix> all_generators(const AlgebraConfig& cfg);

/// Expansion of a real diagonal matrix in the identity plus Cartan generators.
struct DiagonalDecomposition {
  double identity = 0.0;
  /// cartan[n-2] multiplies D(n), n = 2..N.
  std::vector<double> cartan;

  double coefficient(int n) const { return cartan.at(static_cast<std::size_t>(n - 2)); }
};

/// Decomposes `diag` as identity*I + sum_n coefficient(n) D(n). Throws
/// std::domain_error if `diag` has off-diagonal or imaginary entries, or has
/// the wrong size.
DiagonalDecomposition decompose_diagonal(const AlgebraConfig& cfg, const ComplexMatrix& diag);

/// identity*I + sum_n coefficient(n) D(n), the inverse of decompose_diagonal.
ComplexMatrix compose_diagonal(const AlgebraConfig& cfg, const DiagonalDecomposition& parts);

}  // namespace sunlie
