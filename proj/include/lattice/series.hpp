#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "lattice/rational.hpp"

namespace lattice {

/// Truncated formal power series c_0 + c_1 x + ... + c_{N-1} x^{N-1} over
/// exact rationals. N is the order: the number of known coefficients.
///
/// Binary operations return a series of order min(a.order(), b.order()).
/// Reading a coefficient at or beyond the order is an error, never 0.
class Series {
 public:
  /// Throws Error(invalid_argument) on an empty list.
  static Series make(std::vector<Rational> coeffs);
  static Series zero(std::size_t order);
  static Series constant(const Rational& value, std::size_t order);
  /// The series x (0, 1, 0, ...); order >= 2 for it to be visible.
  static Series variable(std::size_t order);
  static Series monomial(const Rational& value, std::size_t degree, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }

  /// Throws Error(out_of_precision) when n >= order().
  const Rational& coeff(std::size_t n) const;
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; order() for the zero series.
  std::size_t valuation() const noexcept;
  bool is_zero() const noexcept { return valuation() == order(); }

  /// Drops coefficients at and above `order`. Throws Error(out_of_precision)
  /// when asked to extend.
  Series truncate(std::size_t order) const;

  bool operator==(const Series&) const = default;

 private:
  explicit Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Rational> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& s);
Series scale(const Rational& factor, const Series& s);
Series mul(const Series& a, const Series& b);

/// Quotient q with q*b = a to the shared order. Throws
/// Error(non_invertible) when b(0) = 0.
Series div(const Series& a, const Series& b);

/// Square root with constant term 1, by the coefficient recurrence
/// r_n = (s_n - sum_{i=1}^{n-1} r_i r_{n-i}) / 2. Throws
/// Error(unsupported_radicand) unless s(0) = 1.
Series sqrt(const Series& s);

/// outer(inner(x)). Throws Error(composition_divergence) unless inner(0) = 0.
Series compose(const Series& outer, const Series& inner);

/// x^k * s at the order of s; the top k coefficients fall off.
Series shift(const Series& s, std::size_t k);

Series pow(const Series& s, std::size_t exponent);

/// 1/(1-x).
Series geometric(std::size_t order);

/// (1-x)^{-k} = sum_m binom(k+m-1, m) x^m. Throws Error(invalid_argument)
/// for k = 0.
Series binomial_series(unsigned k, std::size_t order);

/// Builds a series from small integer coefficients, e.g. {1, -6, 1}.
Series from_integers(std::initializer_list<long> coeffs, std::size_t order);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& s) { return negate(s); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Rational& c, const Series& s) { return scale(c, s); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }

/// {"order": N, "coeffs": ["p/q", ...]}
nlohmann::json to_json(const Series& s);
/// Inverse of to_json. Throws Error(parse_failure) on a malformed document.
Series series_from_json(const nlohmann::json& doc);

}  // namespace lattice
