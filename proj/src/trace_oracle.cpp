#include "sunlie/trace_oracle.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <vector>

namespace sunlie {

namespace {

std::string refusal_message(int n_dim, int ceiling, double flops) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "trace oracle refused for N = %d (ceiling %d): estimated %.3g complex multiply-adds "
                "over %d generators",
                n_dim, ceiling, flops, algebra_dimension(n_dim));
  return buf;
}

double checked_real(Complex value, const char* what, int i, int j, int k) {
  if (std::abs(value.imag()) > kOracleImagTolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s(%d,%d,%d): imaginary residue %.3e", what, i, j, k, value.imag());
    throw OracleConsistencyError(buf);
  }
  return value.real();
}

ComplexMatrix generator_at(const AlgebraConfig& cfg, int index) {
  return make_generator(cfg, index_to_label(index, cfg.n_dim));
}

}  // namespace

OracleRefused::OracleRefused(int n_dim, int ceiling, double estimated_flops)
    : std::runtime_error(refusal_message(n_dim, ceiling, estimated_flops)), n_dim_(n_dim), flops_(estimated_flops) {}

double f_trace(const AlgebraConfig& cfg, int i, int j, int k) {
  cfg.validate();
  const ComplexMatrix si = generator_at(cfg, i);
  const ComplexMatrix sj = generator_at(cfg, j);
  const ComplexMatrix sk = generator_at(cfg, k);
  const ComplexMatrix comm = si * sj - sj * si;
  const Complex value = Complex(0.0, -2.0) / std::pow(cfg.hbar, 3) * (comm * sk).trace();
  return checked_real(value, "f_trace", i, j, k);
}

double d_trace(const AlgebraConfig& cfg, int i, int j, int k) {
  cfg.validate();
  const ComplexMatrix si = generator_at(cfg, i);
  const ComplexMatrix sj = generator_at(cfg, j);
  const ComplexMatrix sk = generator_at(cfg, k);
  const ComplexMatrix anti = si * sj + sj * si;
  const Complex value = 2.0 / std::pow(cfg.hbar, 3) * (anti * sk).trace();
  return checked_real(value, "d_trace", i, j, k);
}

int oracle_ceiling() {
  const char* env = std::getenv("SUNLIE_ORACLE_CEILING");
  if (env == nullptr || *env == '\0') return kDefaultOracleCeiling;
  int value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument(std::string("SUNLIE_ORACLE_CEILING is not an integer: '") + env + "'");
  }
  return value;
}

double oracle_cost_estimate(int n_dim) {
  // ~ dim^3/6 ordered triples, each a dense N x N product (N^3) plus the
  // commutator products shared per (i, j) pair.
  const double dim = algebra_dimension(n_dim);
  const double n = n_dim;
  const double triples = dim * dim * dim / 6.0;
  const double pairs = dim * dim / 2.0;
  return triples * n * n * n + pairs * 2.0 * n * n * n;
}

ConstantTable full_oracle_table(const AlgebraConfig& cfg, ConstantKind kind, int ceiling) {
  cfg.validate();
  const int n_dim = cfg.n_dim;
  if (n_dim > ceiling) throw OracleRefused(n_dim, ceiling, oracle_cost_estimate(n_dim));

  const int dim = algebra_dimension(n_dim);
  const std::vector<ComplexMatrix> gens = all_generators(cfg);
  const double smallest = 1.0 / std::sqrt(2.0 * n_dim * (n_dim - 1.0));
  const double hbar3 = std::pow(cfg.hbar, 3);
  const bool is_f = kind == ConstantKind::F;
  const char* what = is_f ? "f_trace" : "d_trace";

  std::vector<ConstantTriple> found;
  for (int i = 1; i <= dim; ++i) {
    for (int j = is_f ? i + 1 : i; j <= dim; ++j) {
      const ComplexMatrix& si = gens[i - 1];
      const ComplexMatrix& sj = gens[j - 1];
      const ComplexMatrix bracket = is_f ? ComplexMatrix(si * sj - sj * si) : ComplexMatrix(si * sj + sj * si);
      for (int k = is_f ? j + 1 : j; k <= dim; ++k) {
        const Complex tr = (bracket * gens[k - 1]).trace();
        const Complex raw = is_f ? Complex(0.0, -2.0) / hbar3 * tr : 2.0 / hbar3 * tr;
        const double value = checked_real(raw, what, i, j, k);
        const double mag = std::abs(value);
        if (mag <= kOracleZeroThreshold) continue;
        if (mag < 0.5 * smallest) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "%s(%d,%d,%d) = %.3e lies between round-off and the smallest constant %.3e",
                        what, i, j, k, value, smallest);
          throw OracleConsistencyError(buf);
        }
        found.push_back({i, j, k, value});
      }
    }
  }
  return ConstantTable(n_dim, kind, std::move(found));
}

ConstantTable full_oracle_table(const AlgebraConfig& cfg, ConstantKind kind) {
  return full_oracle_table(cfg, kind, oracle_ceiling());
}

}  // namespace sunlie
