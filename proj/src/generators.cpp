#include "sunlie/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sunlie {

void AlgebraConfig::validate() const {
  check_dimension(n_dim);
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::domain_error("hbar must be a positive finite number (got " + std::to_string(hbar) + ")");
  }
}

ComplexMatrix make_generator(const AlgebraConfig& cfg, const GeneratorLabel& label) {
  cfg.validate();
  validate_label(label, cfg.n_dim);

  ComplexMatrix g = ComplexMatrix::Zero(cfg.n_dim, cfg.n_dim);
  const int n = label.n - 1;
  const int m = label.m - 1;
  const double half = 0.5 * cfg.hbar;

  switch (label.kind) {
    case GeneratorKind::Symmetric:
      g(m, n) = half;
      g(n, m) = half;
      break;
    case GeneratorKind::AntiSymmetric:
      g(m, n) = Complex(0.0, -half);
      g(n, m) = Complex(0.0, half);
      break;
    case GeneratorKind::Diagonal: {
      const double level = label.n;
      const double scale = cfg.hbar / std::sqrt(2.0 * level * (level - 1.0));
      for (int k = 0; k < n; ++k) g(k, k) = scale;
      g(n, n) = scale * (1.0 - level);
      break;
    }
  }
  return g;
}

std::vector<ComplexMatrix> all_generators(const AlgebraConfig& cfg) {
  cfg.validate();
  const int count = algebra_dimension(cfg.n_dim);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) out.push_back(make_generator(cfg, index_to_label(i, cfg.n_dim)));
  return out;
}

DiagonalDecomposition decompose_diagonal(const AlgebraConfig& cfg, const ComplexMatrix& diag) {
  cfg.validate();
  const int dim = cfg.n_dim;
  if (diag.rows() != dim || diag.cols() != dim) {
    throw std::domain_error("decompose_diagonal: expected a " + std::to_string(dim) + "x" +
                            std::to_string(dim) + " matrix");
  }
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      if (r != c && diag(r, c) != Complex(0.0)) {
        throw std::domain_error("decompose_diagonal: entry (" + std::to_string(r + 1) + "," +
                                std::to_string(c + 1) + ") is off-diagonal and non-zero");
      }
    }
    if (diag(r, r).imag() != 0.0) {
      throw std::domain_error("decompose_diagonal: diagonal entry " + std::to_string(r + 1) + " is not real");
    }
  }

  DiagonalDecomposition out;
  double trace = 0.0;
  for (int r = 0; r < dim; ++r) trace += diag(r, r).real();
  out.identity = trace / dim;

  // coefficient(n) = (2/hbar^2) Tr[diag D(n)], evaluated on the n non-zero entries of D(n).
  out.cartan.reserve(static_cast<std::size_t>(dim - 1));
  for (int n = 2; n <= dim; ++n) {
    const double level = n;
    const double scale = cfg.hbar / std::sqrt(2.0 * level * (level - 1.0));
    double overlap = 0.0;
    for (int k = 0; k < n - 1; ++k) overlap += diag(k, k).real();
    overlap += (1.0 - level) * diag(n - 1, n - 1).real();
    out.cartan.push_back(2.0 / (cfg.hbar * cfg.hbar) * scale * overlap);
  }
  return out;
}

ComplexMatrix compose_diagonal(const AlgebraConfig& cfg, const DiagonalDecomposition& parts) {
  cfg.validate();
  if (parts.cartan.size() != static_cast<std::size_t>(cfg.n_dim - 1)) {
    throw std::domain_error("compose_diagonal: expected " + std::to_string(cfg.n_dim - 1) + " Cartan coefficients");
  }
  ComplexMatrix out = ComplexMatrix::Identity(cfg.n_dim, cfg.n_dim) * parts.identity;
  for (int n = 2; n <= cfg.n_dim; ++n) {
    out += parts.coefficient(n) * make_generator(cfg, GeneratorLabel::diagonal(n));
  }
  return out;
}

}  // namespace sunlie
