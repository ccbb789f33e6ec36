#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sunlie {

/// f: totally anti-symmetric constants, [S_i, S_j] = i hbar sum_k f_ijk S_k.
/// d: totally symmetric constants, {S_i, S_j} = (hbar^2/N) delta_ij I + hbar sum_k d_ijk S_k.
enum class ConstantKind { F, D };

std::string_view to_string(ConstantKind kind);

/// One non-zero structure constant keyed by 1-based generator indices.
struct ConstantTriple {
  int i = 0;
  int j = 0;
  int k = 0;
  double value = 0.0;

  bool operator==(const ConstantTriple&) const = default;
};

/**
 * Immutable sparse set of non-zero structure constants for one algebra and
 * one kind.
 *
 * Each permutation orbit is stored once, under its ascending index order
 * (strictly ascending for f). For f the stored value is the one of the
 * ascending permutation. Triples are kept in lexicographic order; lookup
 * is a binary search over their packed keys.
 */
class ConstantTable {
 public:
  /// Canonicalizes every entry (sorting indices, flipping the sign of odd
  /// f permutations) and builds the table. Throws std::logic_error on a
  /// duplicate orbit, a zero value, a repeated f index or a value outside
  /// [-2, 2]; std::domain_error on an out-of-range index.
  ConstantTable(int n_dim, ConstantKind kind, std::vector<ConstantTriple> entries);

  int n_dim() const { return n_dim_; }
  ConstantKind kind() const { return kind_; }
  std::size_t size() const { return triples_.size(); }
  std::span<const ConstantTriple> triples() const { return triples_; }

  /// Constant for an arbitrary index order; zero when absent.
  double lookup(int i, int j, int k) const;

 private:
  int n_dim_;
  ConstantKind kind_;
  std::vector<ConstantTriple> triples_;
  std::vector<std::uint64_t> keys_;  // packed (i, j, k), parallel to triples_
};

/// Closed-form table of every non-zero f_ijk of su(N).
ConstantTable build_f_table(int n_dim);

/// Closed-form table of every non-zero d_ijk of su(N).
ConstantTable build_d_table(int n_dim);

ConstantTable build_table(int n_dim, ConstantKind kind);

struct TableStats {
  std::size_t count = 0;
  std::string checksum;  ///< 16 lowercase hex digits
};

/// Triple count and an order-independent hash of the formatted rows.
TableStats table_stats(const ConstantTable& table);

/// Shortest decimal string that round-trips to `value`; always carries a
/// decimal point or exponent.
std::string format_value(double value);

/// CSV row "kind,i,j,k,value" without a trailing newline.
std::string format_row(ConstantKind kind, const ConstantTriple& t);

}  // namespace sunlie
