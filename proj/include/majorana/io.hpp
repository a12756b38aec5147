#pragma once

// JSON documents:
//   state      {"n": int, "dicke": [[re, im] x (n+1)]}
//   roots      {"n": int, "roots": [[re, im] x m], "at_infinity": int}
//   matrix     {"matrix": [[re, im] x 4]}  (row-major)
//   canonical  {"n": int, "partition": [int], "params": [float], "state": state}
// Output is deterministic: fixed key order, 17 significant digits, no -0.

#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <json.hpp>

#include "majorana/canonical.hpp"
#include "majorana/symmetric_state.hpp"

namespace majorana::io {

using Json = nlohmann::ordered_json;

std::string format_number(double x);
/// Single-line serialization with ", " and ": " separators.
std::string dump(const Json& j);
Json parse(std::string_view text);
Json read_file(const std::string& path);

Json complex_pair(std::complex<double> z);
std::complex<double> parse_complex(const Json& j, const std::string& where);

Json state_document(const SymmetricStated& s);
SymmetricStated parse_state(const Json& j);

Json roots_document(const RootMultisetd& r);
RootMultisetd parse_roots(const Json& j);

Json matrix_document(const Eigen::Matrix2cd& m);
Eigen::Matrix2cd parse_matrix(const Json& j);

Json canonical_document(const CanonicalForm& f);
CanonicalForm parse_canonical(const Json& j);

/// Accepts a state, roots or canonical document.
SymmetricStated parse_any_state(const Json& j);

}  // namespace majorana::io
