#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sunlie/generators.hpp"
#include "sunlie/structure_constants.hpp"

namespace sunlie {

/// H = h0 I + (1/hbar) sum_k h_k S_k for the algebra the coefficients came from.
struct HamiltonianCoefficients {
  double h0 = 0.0;
  RealVector h;
  double hbar = 1.0;
};

/// Generator expectation values S_k = Tr[rho S_k] at a given time.
struct BlochVector {
  RealVector s;
  double time = 0.0;
};

/// Amplitudes c_k of |psi> = sum_k c_k |k>.
using StateVector = ComplexVector;

struct StateSample {
  StateVector c;
  double time = 0.0;
};

enum class IntegrationMethod { RK4, RK45 };

struct IntegrationSpec {
  double t_final = 0.0;
  /// Step for RK4; output spacing unit and initial step for RK45.
  double dt = 1e-3;
  IntegrationMethod method = IntegrationMethod::RK4;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  /// Keep one sample every `output_stride` steps of size dt (the final time is always kept).
  int output_stride = 1;

  /// Throws std::domain_error on a non-positive dt, negative t_final,
  /// stride < 1 or non-positive tolerances.
  void validate() const;
};

/// Thrown by the adaptive integrator when the step size collapses.
class StepSizeUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Splits a Hermitian matrix into h0 = Tr[H]/N and h_k = (2/hbar) Tr[H S_k],
 * the projection that makes h0 I + (1/hbar) sum h_k S_k reproduce H.
 *
 * Throws std::domain_error if H is not N x N or deviates from Hermitian by
 * more than 1e-12 (relative to its largest entry when that exceeds 1).
 */
HamiltonianCoefficients decompose_hamiltonian(const AlgebraConfig& cfg, const ComplexMatrix& hamiltonian);

ComplexMatrix reconstruct_hamiltonian(const AlgebraConfig& cfg, const HamiltonianCoefficients& coeffs);

/// Bloch vector of a pure state:
///   S(n,m) -> hbar Re(c_m* c_n), A(n,m) -> hbar Im(c_m* c_n),
///   D(n)   -> hbar (sum_{k<n} |c_k|^2 / sqrt(2n(n-1)) - sqrt((n-1)/(2n)) |c_n|^2).
/// Throws std::domain_error if | ||psi||^2 - 1 | > norm_tolerance.
BlochVector state_to_bloch(const AlgebraConfig& cfg, const StateVector& psi, double norm_tolerance = 1e-12);

/// rho = I/N + (2/hbar^2) sum_k s_k S_k. Positivity is not enforced.
ComplexMatrix reconstruct_density(const AlgebraConfig& cfg, const RealVector& s);

/// dS_i/dt = (1/hbar) sum_jk f_ijk h_j S_k, contracted over the stored f orbits.
RealVector precession_rhs(const ConstantTable& f_table, const HamiltonianCoefficients& coeffs, const RealVector& s);

std::vector<BlochVector> integrate_bloch(const ConstantTable& f_table, const HamiltonianCoefficients& coeffs,
                                         const BlochVector& s0, const IntegrationSpec& spec);

/// Integrates dc/dt = (-i/hbar) H c.
std::vector<StateSample> integrate_tdse(const AlgebraConfig& cfg, const ComplexMatrix& hamiltonian,
                                        const StateVector& psi0, const IntegrationSpec& spec);

/// Sum of squared Bloch components, conserved by the precession equation.
inline double casimir(const RealVector& s) { return s.squaredNorm(); }

/// Hermitian matrix from the Gaussian unitary ensemble, scaled to spectral radius 1.
ComplexMatrix random_gue_hamiltonian(int n_dim, std::mt19937_64& rng);

/// Uniformly distributed normalized state (normalized complex Gaussian vector).
StateVector random_state(int n_dim, std::mt19937_64& rng);

}  // namespace sunlie
