#include "sunlie/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ode.hpp"

namespace sunlie {

namespace {

void require_square(const ComplexMatrix& m, int n_dim, const char* what) {
  if (m.rows() != n_dim || m.cols() != n_dim) {
    throw std::domain_error(std::string(what) + ": expected a " + std::to_string(n_dim) + "x" +
                            std::to_string(n_dim) + " matrix, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
}

}  // namespace

void IntegrationSpec::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::domain_error("integration dt must be positive");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw std::domain_error("integration t_final must be >= 0");
  if (output_stride < 1) throw std::domain_error("output stride must be >= 1");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw std::domain_error("integration tolerances must be positive");
}

HamiltonianCoefficients decompose_hamiltonian(const AlgebraConfig& cfg, const ComplexMatrix& hamiltonian) {
  cfg.validate();
  require_square(hamiltonian, cfg.n_dim, "decompose_hamiltonian");
  const double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
  const double skew = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * scale) {
    throw std::domain_error("decompose_hamiltonian: matrix is not Hermitian (max |H - H^dagger| = " +
                            std::to_string(skew) + ")");
  }

  const int dim = algebra_dimension(cfg.n_dim);
  HamiltonianCoefficients out;
  out.hbar = cfg.hbar;
  out.h0 = hamiltonian.trace().real() / cfg.n_dim;
  out.h.resize(dim);
  for (int k = 1; k <= dim; ++k) {
    const ComplexMatrix gen = make_generator(cfg, index_to_label(k, cfg.n_dim));
    out.h[k - 1] = 2.0 / cfg.hbar * (hamiltonian * gen).trace().real();
  }

  const double residual = (reconstruct_hamiltonian(cfg, out) - hamiltonian).cwiseAbs().maxCoeff();
  if (residual > 1e-12 * scale) {
    throw std::logic_error("decompose_hamiltonian: reconstruction residual " + std::to_string(residual));
  }
  return out;
}

ComplexMatrix reconstruct_hamiltonian(const AlgebraConfig& cfg, const HamiltonianCoefficients& coeffs) {
  cfg.validate();
  const int dim = algebra_dimension(cfg.n_dim);
  if (coeffs.h.size() != dim) throw std::domain_error("reconstruct_hamiltonian: coefficient length mismatch");
  ComplexMatrix out = ComplexMatrix::Identity(cfg.n_dim, cfg.n_dim) * coeffs.h0;
  for (int k = 1; k <= dim; ++k) {
    out += (coeffs.h[k - 1] / cfg.hbar) * make_generator(cfg, index_to_label(k, cfg.n_dim));
  }
  return out;
}

BlochVector state_to_bloch(const AlgebraConfig& cfg, const StateVector& psi, double norm_tolerance) {
  cfg.validate();
  const int n_dim = cfg.n_dim;
  if (psi.size() != n_dim) {
    throw std::domain_error("state_to_bloch: expected " + std::to_string(n_dim) + " amplitudes, got " +
                            std::to_string(psi.size()));
  }
  const double norm2 = psi.squaredNorm();
  if (std::abs(norm2 - 1.0) > norm_tolerance) {
    throw std::domain_error("state_to_bloch: state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
  }

  BlochVector out;
  out.s.resize(algebra_dimension(n_dim));
  double lower_population = 0.0;  // sum_{k<n} |c_k|^2
  for (int n = 2; n <= n_dim; ++n) {
    lower_population += std::norm(psi[n - 2]);
    for (int m = 1; m < n; ++m) {
      const Complex coherence = std::conj(psi[m - 1]) * psi[n - 1];
      out.s[label_to_index(GeneratorLabel::symmetric(n, m), n_dim) - 1] = cfg.hbar * coherence.real();
      out.s[label_to_index(GeneratorLabel::anti_symmetric(n, m), n_dim) - 1] = cfg.hbar * coherence.imag();
    }
    const double level = n;
    out.s[label_to_index(GeneratorLabel::diagonal(n), n_dim) - 1] =
        cfg.hbar * (lower_population / std::sqrt(2.0 * level * (level - 1.0)) -
                    std::sqrt((level - 1.0) / (2.0 * level)) * std::norm(psi[n - 1]));
  }
  return out;
}

ComplexMatrix reconstruct_density(const AlgebraConfig& cfg, const RealVector& s) {
  cfg.validate();
  const int dim = algebra_dimension(cfg.n_dim);
  if (s.size() != dim) {
    throw std::domain_error("reconstruct_density: expected " + std::to_string(dim) + " components");
  }
  ComplexMatrix rho = ComplexMatrix::Identity(cfg.n_dim, cfg.n_dim) / static_cast<double>(cfg.n_dim);
  const double weight = 2.0 / (cfg.hbar * cfg.hbar);
  for (int k = 1; k <= dim; ++k) {
    rho += (weight * s[k - 1]) * make_generator(cfg, index_to_label(k, cfg.n_dim));
  }
  return rho;
}

RealVector precession_rhs(const ConstantTable& f_table, const HamiltonianCoefficients& coeffs, const RealVector& s) {
  if (f_table.kind() != ConstantKind::F) throw std::invalid_argument("precession_rhs needs an f table");
  const int dim = algebra_dimension(f_table.n_dim());
  if (coeffs.h.size() != dim || s.size() != dim) {
    throw std::domain_error("precession_rhs: vectors must have length " + std::to_string(dim));
  }
  RealVector ds = RealVector::Zero(dim);
  const auto& h = coeffs.h;
  // One orbit a < b < c with f_abc = v feeds all six permutations.
  for (const auto& t : f_table.triples()) {
    const int a = t.i - 1, b = t.j - 1, c = t.k - 1;
    ds[a] += t.value * (h[b] * s[c] - h[c] * s[b]);
    ds[b] += t.value * (h[c] * s[a] - h[a] * s[c]);
    ds[c] += t.value * (h[a] * s[b] - h[b] * s[a]);
  }
  return ds / coeffs.hbar;
}

std::vector<BlochVector> integrate_bloch(const ConstantTable& f_table, const HamiltonianCoefficients& coeffs,
                                         const BlochVector& s0, const IntegrationSpec& spec) {
  auto rhs = [&](const RealVector& s) { return precession_rhs(f_table, coeffs, s); };
  const auto samples = detail::integrate<RealVector>(rhs, s0.s, spec);
  std::vector<BlochVector> out;
  out.reserve(samples.size());
  for (const auto& sample : samples) out.push_back({sample.value, s0.time + sample.time});
  return out;
}

std::vector<StateSample> integrate_tdse(const AlgebraConfig& cfg, const ComplexMatrix& hamiltonian,
                                        const StateVector& psi0, const IntegrationSpec& spec) {
  cfg.validate();
  require_square(hamiltonian, cfg.n_dim, "integrate_tdse");
  if (psi0.size() != cfg.n_dim) throw std::domain_error("integrate_tdse: state length mismatch");
  if (std::abs(psi0.squaredNorm() - 1.0) > 1e-12) throw std::domain_error("integrate_tdse: state is not normalized");
  const double skew = (hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * std::max(1.0, hamiltonian.cwiseAbs().maxCoeff())) {
    throw std::domain_error("integrate_tdse: Hamiltonian is not Hermitian");
  }

  const ComplexMatrix generator = Complex(0.0, -1.0 / cfg.hbar) * hamiltonian;
  auto rhs = [&](const StateVector& c) -> StateVector { return generator * c; };
  const auto samples = detail::integrate<StateVector>(rhs, psi0, spec);
  std::vector<StateSample> out;
  out.reserve(samples.size());
  for (const auto& sample : samples) out.push_back({sample.value, sample.time});
  return out;
}

ComplexMatrix random_gue_hamiltonian(int n_dim, std::mt19937_64& rng) {
  check_dimension(n_dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix a(n_dim, n_dim);
  for (int r = 0; r < n_dim; ++r)
    for (int c = 0; c < n_dim; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix h = 0.5 * (a + a.adjoint());
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h, Eigen::EigenvaluesOnly);
  const double radius = eig.eigenvalues().cwiseAbs().maxCoeff();
  h /= radius;
  // Restore exact Hermiticity after scaling.
  return 0.5 * (h + h.adjoint());
}

StateVector random_state(int n_dim, std::mt19937_64& rng) {
  check_dimension(n_dim);
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector c(n_dim);
  for (int k = 0; k < n_dim; ++k) c[k] = Complex(gauss(rng), gauss(rng));
  return c / c.norm();
}

}  // namespace sunlie
