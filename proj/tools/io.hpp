#pragma once

#include <string>

#include "brsc/boolmatrix.hpp"
#include "brsc/complex.hpp"
#include "json.hpp"

namespace brsc {

// Reports and file formats use insertion-ordered JSON so that output is
// byte-identical across runs.
using Json = nlohmann::ordered_json;

// {"format": 1, "vertices": [...], "facets": [[...], ...]}
Json complex_to_json(const SimplicialComplex& s);

// Accepts the complex format; `where` prefixes error messages, which name
// the offending entry.
SimplicialComplex complex_from_json(const Json& j, const std::string& where);

// {"format": 1, "rows": [...], "vertices": [...], "entries": ["0101", ...]}
Json matrix_to_json(const BooleanMatrix& m);
BooleanMatrix matrix_from_json(const Json& j, const std::string& where);

SimplicialComplex load_complex(const std::string& path);
BooleanMatrix load_matrix(const std::string& path);
void save(const Json& report, const std::string& path);

}  // namespace brsc
