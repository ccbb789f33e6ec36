#include "sunlie/structure_constants.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sunlie/indexing.hpp"

namespace sunlie {

namespace {

constexpr int kKeyBits = 21;

std::uint64_t pack_key(int i, int j, int k) {
  return (static_cast<std::uint64_t>(i) << (2 * kKeyBits)) | (static_cast<std::uint64_t>(j) << kKeyBits) |
         static_cast<std::uint64_t>(k);
}

// Sorts (i, j, k) ascending and returns the parity of the permutation applied
// (+1 even, -1 odd).
int sort_with_parity(std::array<int, 3>& idx) {
  int sign = 1;
  auto swap_if = [&](int a, int b) {
    if (idx[a] > idx[b]) {
      std::swap(idx[a], idx[b]);
      sign = -sign;
    }
  };
  swap_if(0, 1);
  swap_if(1, 2);
  swap_if(0, 1);
  return sign;
}

// Unchecked index arithmetic for the enumeration loops, whose level ranges
// already guarantee valid labels.
constexpr int sym(int n, int m) { return n * n + 2 * (m - n) - 1; }
constexpr int asym(int n, int m) { return n * n + 2 * (m - n); }
constexpr int diag(int n) { return n * n - 1; }

std::size_t choose(std::size_t n, std::size_t k) {
  if (n < k) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string_view to_string(ConstantKind kind) { return kind == ConstantKind::F ? "f" : "d"; }

ConstantTable::ConstantTable(int n_dim, ConstantKind kind, std::vector<ConstantTriple> entries)
    : n_dim_(n_dim), kind_(kind), triples_(std::move(entries)) {
  check_dimension(n_dim);
  if (algebra_dimension(n_dim) >= (1 << kKeyBits)) {
    throw std::domain_error("N = " + std::to_string(n_dim) + " is too large for the table key layout");
  }
  keys_.reserve(triples_.size());

  for (auto& t : triples_) {
    std::array<int, 3> idx{t.i, t.j, t.k};
    for (int v : idx) validate_index(v, n_dim);
    const int parity = sort_with_parity(idx);
    if (t.value == 0.0 || !std::isfinite(t.value) || std::abs(t.value) > 2.0) {
      throw std::logic_error("structure constant (" + std::to_string(t.i) + "," + std::to_string(t.j) + "," +
                             std::to_string(t.k) + ") has invalid value " + std::to_string(t.value));
    }
    if (kind == ConstantKind::F) {
      if (idx[0] == idx[1] || idx[1] == idx[2]) {
        throw std::logic_error("f constant with repeated index (" + std::to_string(t.i) + "," +
                               std::to_string(t.j) + "," + std::to_string(t.k) + ")");
      }
      t.value *= parity;
    }
    t.i = idx[0];
    t.j = idx[1];
    t.k = idx[2];
  }

  // Packed keys order exactly like (i, j, k), so one sort serves both storage and lookup.
  std::sort(triples_.begin(), triples_.end(), [](const ConstantTriple& a, const ConstantTriple& b) {
    return pack_key(a.i, a.j, a.k) < pack_key(b.i, b.j, b.k);
  });
  for (std::size_t p = 0; p < triples_.size(); ++p) {
    const auto& t = triples_[p];
    keys_.push_back(pack_key(t.i, t.j, t.k));
    if (p > 0 && keys_[p] == keys_[p - 1]) {
      throw std::logic_error("duplicate " + std::string(to_string(kind)) + " constant for orbit (" +
                             std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")");
    }
  }
}

double ConstantTable::lookup(int i, int j, int k) const {
  std::array<int, 3> idx{i, j, k};
  for (int v : idx) validate_index(v, n_dim_);
  const int parity = sort_with_parity(idx);
  if (kind_ == ConstantKind::F && (idx[0] == idx[1] || idx[1] == idx[2])) return 0.0;
  const std::uint64_t key = pack_key(idx[0], idx[1], idx[2]);
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return 0.0;
  const double value = triples_[static_cast<std::size_t>(it - keys_.begin())].value;
  return kind_ == ConstantKind::F ? parity * value : value;
}

ConstantTable build_f_table(int n_dim) {
  check_dimension(n_dim);
  const int big_n = n_dim;
  const auto un = static_cast<std::size_t>(n_dim);
  std::vector<ConstantTriple> out;
  out.reserve(4 * choose(un, 3) + choose(un + 1, 3) + choose(un - 1, 2));

  // Three distinct levels top > mid > low.
  for (int top = 3; top <= big_n; ++top) {
    for (int mid = 2; mid < top; ++mid) {
      for (int low = 1; low < mid; ++low) {
        out.push_back({sym(mid, low), sym(top, mid), asym(top, low), 0.5});
        out.push_back({sym(top, low), sym(top, mid), asym(mid, low), 0.5});
        out.push_back({sym(mid, low), sym(top, low), asym(top, mid), 0.5});
        out.push_back({asym(mid, low), asym(top, low), asym(top, mid), 0.5});
      }
    }
  }

  // S(n,m), A(n,m) against the Cartan generators.
  for (int n = 2; n <= big_n; ++n) {
    const double dn = n;
    for (int m = 1; m < n; ++m) {
      const int s = sym(n, m);
      const int a = asym(n, m);
      if (m >= 2) {
        const double dm = m;
        out.push_back({s, a, diag(m), -std::sqrt((dm - 1.0) / (2.0 * dm))});
      }
      for (int k = m + 1; k < n; ++k) {
        const double dk = k;
        out.push_back({s, a, diag(k), 1.0 / std::sqrt(2.0 * dk * (dk - 1.0))});
      }
      out.push_back({s, a, diag(n), std::sqrt(dn / (2.0 * (dn - 1.0)))});
    }
  }
  return ConstantTable(n_dim, ConstantKind::F, std::move(out));
}

ConstantTable build_d_table(int n_dim) {
  check_dimension(n_dim);
  const int big_n = n_dim;
  const auto un = static_cast<std::size_t>(n_dim);
  std::vector<ConstantTriple> out;
  out.reserve(6 * choose(un, 3) + 2 * (choose(un - 1, 2) + 2 * choose(un, 3) + choose(un, 2)) + choose(un - 1, 2) + un);

  for (int top = 3; top <= big_n; ++top) {
    for (int mid = 2; mid < top; ++mid) {
      for (int low = 1; low < mid; ++low) {
        out.push_back({sym(mid, low), sym(top, mid), sym(top, low), 0.5});
        out.push_back({sym(mid, low), asym(top, mid), asym(top, low), 0.5});
        out.push_back({sym(top, mid), asym(mid, low), asym(top, low), 0.5});
        out.push_back({sym(top, low), asym(top, mid), asym(mid, low), -0.5});
      }
    }
  }

  // d_{XX D(k)} for X = S(n,m) and X = A(n,m) share their values.
  for (int n = 2; n <= big_n; ++n) {
    const double dn = n;
    for (int m = 1; m < n; ++m) {
      for (const int x : {sym(n, m), asym(n, m)}) {
        if (m >= 2) {
          const double dm = m;
          out.push_back({x, x, diag(m), -std::sqrt((dm - 1.0) / (2.0 * dm))});
        }
        for (int k = m + 1; k < n; ++k) {
          const double dk = k;
          out.push_back({x, x, diag(k), 1.0 / std::sqrt(2.0 * dk * (dk - 1.0))});
        }
        if (n >= 3) out.push_back({x, x, diag(n), (2.0 - dn) / std::sqrt(2.0 * dn * (dn - 1.0))});
        for (int k = n + 1; k <= big_n; ++k) {
          const double dk = k;
          out.push_back({x, x, diag(k), std::sqrt(2.0 / (dk * (dk - 1.0)))});
        }
      }
    }
  }

  // Cartan-only constants.
  for (int n = 3; n <= big_n; ++n) {
    const double dn = n;
    const double root = std::sqrt(2.0 / (dn * (dn - 1.0)));
    for (int k = 2; k < n; ++k) out.push_back({diag(n), diag(k), diag(k), root});
    out.push_back({diag(n), diag(n), diag(n), (2.0 - dn) * root});
  }
  return ConstantTable(n_dim, ConstantKind::D, std::move(out));
}

ConstantTable build_table(int n_dim, ConstantKind kind) {
  return kind == ConstantKind::F ? build_f_table(n_dim) : build_d_table(n_dim);
}

std::string format_value(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::runtime_error("format_value: conversion failed");
  std::string out(buf.data(), ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

std::string format_row(ConstantKind kind, const ConstantTriple& t) {
  std::string row(to_string(kind));
  row += ',' + std::to_string(t.i) + ',' + std::to_string(t.j) + ',' + std::to_string(t.k) + ',';
  row += format_value(t.value);
  return row;
}

TableStats table_stats(const ConstantTable& table) {
  std::uint64_t sum = 0;
  for (const auto& t : table.triples()) sum += fnv1a(format_row(table.kind(), t));
  std::array<char, 17> hex{};
  std::snprintf(hex.data(), hex.size(), "%016llx", static_cast<unsigned long long>(sum));
  return {table.size(), std::string(hex.data())};
}

}  // namespace sunlie
