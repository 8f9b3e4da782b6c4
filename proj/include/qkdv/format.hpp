#pragma once

#include "qkdv/diffpoly.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace qkdv {

/// Canonical text form: terms "RAT * s^A * v{k}^E * ..." joined by " + ".
/// Rank-one variables print as "v{k}", higher rank as "v{alpha},{k}".
/// The zero polynomial prints as "0".
std::string to_text(const DiffPoly& p);
std::string to_text(const Coefficient& c);

/// JSON list of {"coeff": {"num", "den", "spow"}, "vars": [[alpha, k, exp], ...]}.
/// num and den are JSON integers when they fit in 64 bits, decimal strings otherwise.
nlohmann::json to_json(const DiffPoly& p);
DiffPoly diffpoly_from_json(const nlohmann::json& j, int rank = 1);

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);

inline std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << to_text(p); }
inline std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << to_text(c); }

}  // namespace qkdv
