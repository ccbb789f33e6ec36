#pragma once

#include <stdexcept>
#include <string>

#include "sunlie/generators.hpp"
#include "sunlie/structure_constants.hpp"

namespace sunlie {

// Brute-force structure constants from trace formulas over dense generator
// products. Deliberately naive: it is the reference the closed-form tables
// are checked against.

/// Imaginary residue above which a trace evaluation is reported as broken.
inline constexpr double kOracleImagTolerance = 1e-12;

/// Values at or below this magnitude are treated as zero by full_oracle_table.
inline constexpr double kOracleZeroThreshold = 1e-10;

/// Default largest N full_oracle_table accepts; SUNLIE_ORACLE_CEILING overrides.
inline constexpr int kDefaultOracleCeiling = 8;

/// Thrown when an oracle trace has a non-negligible imaginary part, or a
/// value falls between round-off and the smallest genuine constant.
class OracleConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown when the requested N exceeds the oracle ceiling.
class OracleRefused : public std::runtime_error {
 public:
  OracleRefused(int n_dim, int ceiling, double estimated_flops);
  int n_dim() const { return n_dim_; }
  double estimated_flops() const { return flops_; }

 private:
  int n_dim_;
  double flops_;
};

/// f_ijk = Re[(-2i/hbar^3) Tr([S_i, S_j] S_k)].
double f_trace(const AlgebraConfig& cfg, int i, int j, int k);

/// d_ijk = Re[(2/hbar^3) Tr({S_i, S_j} S_k)].
double d_trace(const AlgebraConfig& cfg, int i, int j, int k);

/// Ceiling from SUNLIE_ORACLE_CEILING, or kDefaultOracleCeiling when unset.
/// Throws std::invalid_argument if the variable is set to a non-integer.
int oracle_ceiling();

/// Rough complex multiply-add count of full_oracle_table at this N.
double oracle_cost_estimate(int n_dim);

/**
 * Evaluates every index triple (i <= j <= k, strict for f) through the trace
 * formula and keeps the ones above kOracleZeroThreshold.
 *
 * Throws OracleRefused above `ceiling`, OracleConsistencyError if any value
 * lands between the zero threshold and half the smallest possible non-zero
 * constant 1/sqrt(2N(N-1)).
 */
ConstantTable full_oracle_table(const AlgebraConfig& cfg, ConstantKind kind, int ceiling);
ConstantTable full_oracle_table(const AlgebraConfig& cfg, ConstantKind kind);

}  // namespace sunlie
