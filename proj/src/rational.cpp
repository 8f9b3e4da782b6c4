#include "qkdv/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qkdv {

Integer factorial(long n) {
  if (n < 0) {
    throw std::invalid_argument("factorial of a negative integer");
  }
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer binomial(long a, long k) {
  if (k < 0) {
    return 0;
  }
  if (a >= 0) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return r;
  }
  // C(a, k) = (-1)^k C(k - a - 1, k) for a < 0.
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - a - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : Integer(-r);
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) {
    return r.get_num().get_str();
  }
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in rational literal");
  }
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace qkdv
