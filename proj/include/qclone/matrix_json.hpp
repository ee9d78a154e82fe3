#pragma once

#include <string>

#include "json.hpp"
#include "qclone/matrix.hpp"

namespace qclone {

// Shared on-disk format: {"dim": n, "entries": [[re, im], …]} with n²
// row-major pairs. Written at full double precision so every matrix
// round-trips bit-exactly.
nlohmann::json matrix_to_json(const ComplexMatrix& m);

// Throws DimensionMismatch on a malformed object, a wrong entry count,
// or non-finite numbers.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const ComplexMatrix& m);

} // namespace qclone
