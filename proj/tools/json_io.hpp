#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "eigenmatrix/jordan.hpp"
#include "eigenmatrix/matrix.hpp"
#include "eigenmatrix/spectrum.hpp"

namespace eigenmatrix::cli {

using Json = nlohmann::json;

/// {"rows":R,"cols":C,"entries":[[scalar x C] x R]}; SchemaError names the bad row/col.
Matrix parse_matrix_json(std::string_view text);
/// {"eigenvalues":[{"value":"<scalar>","multiplicity":<int>}, ...]}
Spectrum parse_spectrum_json(std::string_view text);

Json matrix_to_json(const Matrix& m);
Json vector_to_json(const Vector& v);
Json vectors_to_json(const std::vector<Vector>& vs);
Json spectrum_to_json(const Spectrum& s);

std::string read_file(const std::string& path);

}  // namespace eigenmatrix::cli
