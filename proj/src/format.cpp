#include "qkdv/format.hpp"

#include <stdexcept>

namespace qkdv {

namespace {

std::string var_text(const Var& v, int rank) {
  if (rank == 1) {
    return "v" + std::to_string(v.order);
  }
  return "v" + std::to_string(v.alpha) + "," + std::to_string(v.order);
}

std::string term_text(const Rational& r, unsigned spow, const Monomial& m, int rank) {
  std::string out = to_string(r);
  if (spow == 1) {
    out += " * s";
  } else if (spow > 1) {
    out += " * s^" + std::to_string(spow);
  }
  for (const auto& [v, e] : m.factors()) {
    out += " * " + var_text(v, rank);
    if (e > 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace

std::string to_text(const DiffPoly& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [e, r] : c.terms()) {
      if (!out.empty()) {
        out += " + ";
      }
      out += term_text(r, e, m, p.rank());
    }
  }
  return out;
}

std::string to_text(const Coefficient& c) {
  if (c.is_zero()) {
    return "0";
  }
  std::string out;
  for (const auto& [e, r] : c.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    out += term_text(r, e, Monomial{}, 1);
  }
  return out;
}

nlohmann::json integer_to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t()) != 0) {
    return static_cast<std::int64_t>(z.get_si());
  }
  return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return Integer(std::to_string(j.get<std::int64_t>()), 10);
  }
  if (j.is_string()) {
    return Integer(j.get<std::string>(), 10);
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(integer_from_json(j));
  }
  throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

nlohmann::json to_json(const DiffPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : m.factors()) {
      vars.push_back({v.alpha, v.order, e});
    }
    for (const auto& [e, r] : c.terms()) {
      out.push_back({{"coeff",
                      {{"num", integer_to_json(r.get_num())},
                       {"den", integer_to_json(r.get_den())},
                       {"spow", e}}},
                     {"vars", vars}});
    }
  }
  return out;
}

DiffPoly diffpoly_from_json(const nlohmann::json& j, int rank) {
  if (!j.is_array()) {
    throw std::invalid_argument("polynomial JSON must be an array of terms");
  }
  DiffPoly out(rank);
  for (const auto& t : j) {
    const auto& coeff = t.at("coeff");
    Integer num = integer_from_json(coeff.at("num"));
    Integer den = integer_from_json(coeff.at("den"));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in polynomial JSON");
    }
    Rational r(num, den);
    r.canonicalize();
    const int spow = coeff.at("spow").get<int>();
    if (spow < 0) {
      throw std::invalid_argument("negative s exponent in polynomial JSON");
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& v : t.at("vars")) {
      factors.emplace_back(Var{v.at(0).get<int>(), v.at(1).get<int>()}, v.at(2).get<int>());
    }
    out += DiffPoly::term(Monomial(std::move(factors)), Coefficient::s_power(static_cast<unsigned>(spow), r), rank);
  }
  return out;
}

}  // namespace qkdv
