#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "sunlie/dynamics.hpp"
#include "sunlie/generators.hpp"
#include "sunlie/structure_constants.hpp"

namespace sunlie::io {

/// Writes "kind,i,j,k,value" and then every table's rows in lexicographic
/// (i,j,k) order, one table after another.
void write_constants_csv(std::ostream& os, std::span<const ConstantTable> tables);

/// {"n": N, "stats": [{"kind","count","checksum"}...], "constants": [{"kind","i","j","k","value"}...]}
nlohmann::json constants_to_json(std::span<const ConstantTable> tables);

/// {"n": rows, "re": [[...]], "im": [[...]]}
nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Inverse of matrix_to_json. "im" may be omitted for a real matrix. Throws
/// std::invalid_argument on missing fields or ragged/mismatched rows.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"re": [...], "im": [...]} with "im" optional.
StateVector state_from_json(const nlohmann::json& j);

/// Header "t,s_1,...,s_D" then one row per sample.
void write_trajectory_csv(std::ostream& os, std::span<const BlochVector> trajectory);

}  // namespace sunlie::io
