#include "sunlie/indexing.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sunlie {

namespace {

// floor(sqrt(x)) for x >= 0, exact for every int.
int isqrt(int x) {
  auto r = static_cast<int>(std::sqrt(static_cast<double>(x)));
  while (static_cast<long long>(r) * r > x) --r;
  while (static_cast<long long>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

void check_dimension(int n_dim) {
  if (n_dim < 2) throw std::domain_error("N must be >= 2 (got " + std::to_string(n_dim) + ")");
}

void validate_label(const GeneratorLabel& label, int n_dim) {
  check_dimension(n_dim);
  const std::string name = to_string(label);
  if (label.n > n_dim) {
    throw std::domain_error(name + ": level n = " + std::to_string(label.n) + " exceeds N = " +
                            std::to_string(n_dim));
  }
  if (label.kind == GeneratorKind::Diagonal) {
    if (label.n < 2) throw std::domain_error(name + ": diagonal generators require n >= 2");
    return;
  }
  if (label.m < 1) throw std::domain_error(name + ": off-diagonal generators require m >= 1");
  if (label.m >= label.n) throw std::domain_error(name + ": off-diagonal generators require m < n");
}

void validate_index(int i, int n_dim) {
  check_dimension(n_dim);
  if (i < 1 || i > algebra_dimension(n_dim)) {
    throw std::domain_error("generator index " + std::to_string(i) + " outside 1.." +
                            std::to_string(algebra_dimension(n_dim)));
  }
}

int label_to_index(const GeneratorLabel& label, int n_dim) {
  validate_label(label, n_dim);
  const int n = label.n;
  switch (label.kind) {
    case GeneratorKind::Symmetric:
      return n * n + 2 * (label.m - n) - 1;
    case GeneratorKind::AntiSymmetric:
      return n * n + 2 * (label.m - n);
    case GeneratorKind::Diagonal:
      return n * n - 1;
  }
  throw std::logic_error("unreachable generator kind");
}

GeneratorLabel index_to_label(int i, int n_dim) {
  validate_index(i, n_dim);
  // Level n owns the block [(n-1)^2, n^2 - 1]; the last slot is D_n and the
  // rest alternate S_nm, A_nm for m = 1, 2, ...
  const int n = isqrt(i) + 1;
  if (i == n * n - 1) return GeneratorLabel::diagonal(n);
  const int offset = i - (n - 1) * (n - 1);
  const int m = offset / 2 + 1;
  return offset % 2 == 0 ? GeneratorLabel::symmetric(n, m) : GeneratorLabel::anti_symmetric(n, m);
}

std::string to_string(const GeneratorLabel& label) {
  switch (label.kind) {
    case GeneratorKind::Symmetric:
      return "S(" + std::to_string(label.n) + "," + std::to_string(label.m) + ")";
    case GeneratorKind::AntiSymmetric:
      return "A(" + std::to_string(label.n) + "," + std::to_string(label.m) + ")";
    case GeneratorKind::Diagonal:
      return "D(" + std::to_string(label.n) + ")";
  }
  return "?";
}

GeneratorLabel parse_label(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto fail = [&] { return std::invalid_argument("malformed generator label '" + std::string(text) + "'"); };
  if (s.size() < 4 || s[1] != '(' || s.back() != ')') throw fail();

  std::vector<int> levels;
  std::string_view body(s.data() + 2, s.size() - 3);
  while (true) {
    const auto comma = body.find(',');
    const auto field = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) throw fail();
    levels.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }

  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'S':
      if (levels.size() != 2) throw fail();
      return GeneratorLabel::symmetric(levels[0], levels[1]);
    case 'A':
      if (levels.size() != 2) throw fail();
      return GeneratorLabel::anti_symmetric(levels[0], levels[1]);
    case 'D':
      if (levels.size() != 1) throw fail();
      return GeneratorLabel::diagonal(levels[0]);
    default:
      throw fail();
  }
}

}  // namespace sunlie
