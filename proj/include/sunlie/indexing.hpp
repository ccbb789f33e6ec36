#pragma once

#include <string>
#include <string_view>

namespace sunlie {

/// Family of a generalized Gell-Mann generator.
enum class GeneratorKind { Symmetric, AntiSymmetric, Diagonal };

/**
 * Typed identity of an su(N) generator.
 *
 * Symmetric and anti-symmetric labels carry a level pair (n, m) with
 * 1 <= m < n. Diagonal (Cartan) labels carry a single level n >= 2 and
 * leave m at zero. Levels are 1-based.
 */
struct GeneratorLabel {
  GeneratorKind kind = GeneratorKind::Diagonal;
  int n = 2;
  int m = 0;

  static GeneratorLabel symmetric(int n, int m) { return {GeneratorKind::Symmetric, n, m}; }
  static GeneratorLabel anti_symmetric(int n, int m) { return {GeneratorKind::AntiSymmetric, n, m}; }
  static GeneratorLabel diagonal(int n) { return {GeneratorKind::Diagonal, n, 0}; }

  bool operator==(const GeneratorLabel&) const = default;
};

/// Number of generators of su(N), N^2 - 1.
constexpr int algebra_dimension(int n_dim) { return n_dim * n_dim - 1; }

/// Throws std::domain_error unless n_dim >= 2.
void check_dimension(int n_dim);

/// Throws std::domain_error naming the violated bound if `label` is not a
/// generator of su(n_dim).
void validate_label(const GeneratorLabel& label, int n_dim);

/// Throws std::domain_error unless 1 <= i <= n_dim^2 - 1.
void validate_index(int i, int n_dim);

/// Linear 1-based index of a generator: S_nm -> n^2 + 2(m-n) - 1,
/// A_nm -> n^2 + 2(m-n), D_n -> n^2 - 1.
int label_to_index(const GeneratorLabel& label, int n_dim);

/// Inverse of label_to_index, computed arithmetically (no tables).
GeneratorLabel index_to_label(int i, int n_dim);

/// "S(n,m)", "A(n,m)" or "D(n)".
std::string to_string(const GeneratorLabel& label);

/// Parses the to_string() form. Whitespace is ignored; the leading letter is
/// case-insensitive. Throws std::invalid_argument on malformed text.
GeneratorLabel parse_label(std::string_view text);

}  // namespace sunlie
