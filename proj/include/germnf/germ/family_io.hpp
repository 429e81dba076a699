#pragma once

#include "germnf/germ/germ.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace germnf {

using Json = nlohmann::json;

/// Malformed family input; the message names the offending field or term.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [{"exponents": [...], "coeff": "a/b+c/d*i"}, ...] in graded-lex order.
Json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j, int n, int D, const std::string& where);

/// {"linear_diag": [...]} or {"linear": [[...]]}, plus nonlinear "terms"
/// with 1-based components.
Json germ_to_json(const Germ& g);
Germ germ_from_json(const Json& j, int n, int D, const std::string& where);

/// {"schema": 1, "n", "p", "degree", "maps": [...]}.
Json family_to_json(const Family& fam);
Family family_from_json(const Json& j);

/// Reads and parses a family file; throws InputError on any problem.
Family read_family_file(const std::string& path);

/// Canonical serialization (sorted keys, two-space indent, trailing newline).
std::string canonical_dump(const Json& j);

}  // namespace germnf
