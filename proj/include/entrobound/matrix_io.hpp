#pragma once

#include <string>
#include <string_view>

#include "entrobound/tensor_core.hpp"

namespace entrobound {

/// Parses {"d": int, "re": [[...]], "im": [[...]]} (row-major d x d arrays).
/// Rejects non-square shapes, missing fields and NaN/Inf entries with
/// ErrorKind::Parse / NonFinite.
ComplexMatrix parse_matrix_json(std::string_view text);

std::string matrix_to_json(const ComplexMatrix& m);

ComplexMatrix load_matrix_file(const std::string& path);

} // namespace entrobound
