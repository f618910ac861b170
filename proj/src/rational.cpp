#include "lattice/rational.hpp"

#include <cctype>

#include "lattice/error.hpp"

namespace lattice {

namespace {

bool is_decimal(std::string_view text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorKind::invalid_argument, "rational with zero denominator");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text)) {
    throw Error(ErrorKind::parse_failure, "not a decimal integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorKind::parse_failure, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (is_integer(value)) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace lattice
