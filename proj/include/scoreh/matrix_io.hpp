#pragma once

#include <iosfwd>
#include <string>

#include "scoreh/linalg.hpp"

namespace scoreh {

/// Row-major CSV, full double precision, comma separated, no header.
void write_matrix_csv(const Matrix& m, std::ostream& out);
void write_matrix_csv(const Matrix& m, const std::string& path);
void write_vector_csv(const Vector& v, const std::string& path);

Matrix read_matrix_csv(std::istream& in);

}  // namespace scoreh
