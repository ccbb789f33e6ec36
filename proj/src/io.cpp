#include "sunlie/io.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace sunlie::io {

using nlohmann::json;

namespace {

std::vector<double> real_row(const json& row, const char* field) {
  if (!row.is_array()) throw std::invalid_argument(std::string("'") + field + "' must be an array");
  std::vector<double> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_number()) throw std::invalid_argument(std::string("'") + field + "' holds a non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

void write_constants_csv(std::ostream& os, std::span<const ConstantTable> tables) {
  os << "kind,i,j,k,value\n";
  for (const auto& table : tables) {
    for (const auto& t : table.triples()) os << format_row(table.kind(), t) << '\n';
  }
}

json constants_to_json(std::span<const ConstantTable> tables) {
  json out;
  out["n"] = tables.empty() ? 0 : tables.front().n_dim();
  out["stats"] = json::array();
  out["constants"] = json::array();
  for (const auto& table : tables) {
    const auto stats = table_stats(table);
    const std::string kind(to_string(table.kind()));
    out["stats"].push_back({{"kind", kind}, {"count", stats.count}, {"checksum", stats.checksum}});
    for (const auto& t : table.triples()) {
      out["constants"].push_back({{"kind", kind}, {"i", t.i}, {"j", t.j}, {"k", t.k}, {"value", t.value}});
    }
  }
  return out;
}

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"n", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re")) throw std::invalid_argument("matrix JSON needs a 're' field");
  const auto& re = j.at("re");
  if (!re.is_array() || re.empty()) throw std::invalid_argument("'re' must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(re.size());
  if (j.contains("n") && j.at("n").get<Eigen::Index>() != n) {
    throw std::invalid_argument("'n' = " + j.at("n").dump() + " disagrees with " + std::to_string(n) + " rows");
  }
  const bool has_im = j.contains("im");
  if (has_im && (!j.at("im").is_array() || static_cast<Eigen::Index>(j.at("im").size()) != n)) {
    throw std::invalid_argument("'im' must have the same number of rows as 're'");
  }

  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto re_row = real_row(re.at(static_cast<std::size_t>(r)), "re");
    const auto im_row = has_im ? real_row(j.at("im").at(static_cast<std::size_t>(r)), "im")
                               : std::vector<double>(static_cast<std::size_t>(n), 0.0);
    if (static_cast<Eigen::Index>(re_row.size()) != n || static_cast<Eigen::Index>(im_row.size()) != n) {
      throw std::invalid_argument("matrix row " + std::to_string(r + 1) + " does not have " + std::to_string(n) +
                                  " entries");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = Complex(re_row[static_cast<std::size_t>(c)], im_row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

StateVector state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("re")) throw std::invalid_argument("state JSON needs a 're' field");
  const auto re = real_row(j.at("re"), "re");
  const auto im = j.contains("im") ? real_row(j.at("im"), "im") : std::vector<double>(re.size(), 0.0);
  if (re.size() != im.size()) throw std::invalid_argument("'re' and 'im' lengths differ");
  StateVector c(static_cast<Eigen::Index>(re.size()));
  for (std::size_t k = 0; k < re.size(); ++k) c[static_cast<Eigen::Index>(k)] = Complex(re[k], im[k]);
  return c;
}

void write_trajectory_csv(std::ostream& os, std::span<const BlochVector> trajectory) {
  const Eigen::Index dim = trajectory.empty() ? 0 : trajectory.front().s.size();
  os << 't';
  for (Eigen::Index k = 1; k <= dim; ++k) os << ",s_" << k;
  os << '\n';
  for (const auto& sample : trajectory) {
    os << format_value(sample.time);
    for (Eigen::Index k = 0; k < dim; ++k) os << ',' << format_value(sample.s[k]);
    os << '\n';
  }
}

}  // namespace sunlie::io
