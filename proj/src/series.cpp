#include "lattice/series.hpp"

#include <algorithm>
#include <string>

#include "lattice/error.hpp"

namespace lattice {

namespace {

std::size_t shared_order(const Series& a, const Series& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

Series Series::make(std::vector<Rational> coeffs) {
  if (coeffs.empty()) {
    throw Error(ErrorKind::invalid_argument, "series needs at least one coefficient");
  }
  for (auto& c : coeffs) c.canonicalize();
  return Series(std::move(coeffs));
}

Series Series::zero(std::size_t order) {
  if (order == 0) throw Error(ErrorKind::invalid_argument, "series order must be >= 1");
  return Series(std::vector<Rational>(order));
}

Series Series::constant(const Rational& value, std::size_t order) {
  Series s = zero(order);
  s.coeffs_[0] = value;
  return s;
}

Series Series::variable(std::size_t order) { return monomial(1, 1, order); }

Series Series::monomial(const Rational& value, std::size_t degree, std::size_t order) {
  Series s = zero(order);
  if (degree < order) s.coeffs_[degree] = value;
  return s;
}

const Rational& Series::coeff(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw Error(ErrorKind::out_of_precision,
                "coefficient " + std::to_string(n) + " requested from a series of order " +
                    std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

std::size_t Series::valuation() const noexcept {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  return static_cast<std::size_t>(it - coeffs_.begin());
}

Series Series::truncate(std::size_t order) const {
  if (order == 0) throw Error(ErrorKind::invalid_argument, "series order must be >= 1");
  if (order > coeffs_.size()) {
    throw Error(ErrorKind::out_of_precision,
                "cannot extend a series of order " + std::to_string(coeffs_.size()) + " to " +
                    std::to_string(order));
  }
  return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order));
}

Series add(const Series& a, const Series& b) {
  std::vector<Rational> out(shared_order(a, b));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeffs()[n] + b.coeffs()[n];
  return Series::make(std::move(out));
}

Series sub(const Series& a, const Series& b) {
  std::vector<Rational> out(shared_order(a, b));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeffs()[n] - b.coeffs()[n];
  return Series::make(std::move(out));
}

Series negate(const Series& s) { return scale(-1, s); }

Series scale(const Rational& factor, const Series& s) {
  std::vector<Rational> out(s.coeffs().begin(), s.coeffs().end());
  for (auto& c : out) c *= factor;
  return Series::make(std::move(out));
}

Series mul(const Series& a, const Series& b) {
  const std::size_t order = shared_order(a, b);
  auto x = a.coeffs();
  auto y = b.coeffs();
  std::vector<Rational> out(order);
  // Skip leading zeros of either factor; compose and pow feed in
  // high-valuation operands.
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  Rational term;
  for (std::size_t n = va + vb; n < order; ++n) {
    Rational& acc = out[n];
    for (std::size_t i = va; i + vb <= n; ++i) {
      if (x[i] == 0) continue;
      term = x[i] * y[n - i];
      acc += term;
    }
  }
  return Series::make(std::move(out));
}

Series div(const Series& a, const Series& b) {
  const Rational& lead = b.coeffs()[0];
  if (lead == 0) {
    throw Error(ErrorKind::non_invertible, "divisor has zero constant term");
  }
  const std::size_t order = shared_order(a, b);
  auto y = b.coeffs();
  std::vector<Rational> q(order);
  for (std::size_t n = 0; n < order; ++n) {
    Rational acc = a.coeffs()[n];
    for (std::size_t i = 1; i <= n; ++i) acc -= y[i] * q[n - i];
    q[n] = acc / lead;
  }
  return Series::make(std::move(q));
}

Series sqrt(const Series& s) {
  if (s.coeffs()[0] != 1) {
    throw Error(ErrorKind::unsupported_radicand,
                "square root needs constant term 1, got " + to_string(s.coeffs()[0]));
  }
  const std::size_t order = s.order();
  std::vector<Rational> r(order);
  r[0] = 1;
  for (std::size_t n = 1; n < order; ++n) {
    Rational acc = s.coeffs()[n];
    for (std::size_t i = 1; i < n; ++i) acc -= r[i] * r[n - i];
    r[n] = acc / 2;
  }
  return Series::make(std::move(r));
}

Series compose(const Series& outer, const Series& inner) {
  if (inner.coeffs()[0] != 0) {
    throw Error(ErrorKind::composition_divergence,
                "inner series has nonzero constant term " + to_string(inner.coeffs()[0]));
  }
  const std::size_t order = shared_order(outer, inner);
  const Series x = inner.truncate(order);
  // Horner: (((a_{N-1}) y + a_{N-2}) y + ...) y + a_0.
  Series acc = Series::constant(outer.coeffs()[order - 1], order);
  for (std::size_t d = order - 1; d-- > 0;) {
    acc = mul(acc, x);
    std::vector<Rational> c(acc.coeffs().begin(), acc.coeffs().end());
    c[0] += outer.coeffs()[d];
    acc = Series::make(std::move(c));
  }
  return acc;
}

Series shift(const Series& s, std::size_t k) {
  std::vector<Rational> out(s.order());
  for (std::size_t n = k; n < out.size(); ++n) out[n] = s.coeffs()[n - k];
  return Series::make(std::move(out));
}

Series pow(const Series& s, std::size_t exponent) {
  Series result = Series::constant(1, s.order());
  Series base = s;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Series geometric(std::size_t order) { return binomial_series(1, order); }

Series binomial_series(unsigned k, std::size_t order) {
  if (k == 0) {
    throw Error(ErrorKind::invalid_argument, "binomial_series needs k >= 1; use a constant for k = 0");
  }
  if (order == 0) throw Error(ErrorKind::invalid_argument, "series order must be >= 1");
  std::vector<Rational> out(order);
  for (std::size_t m = 0; m < order; ++m) {
    out[m] = Rational(binomial(static_cast<long>(k + m - 1), static_cast<long>(m)));
  }
  return Series::make(std::move(out));
}

Series from_integers(std::initializer_list<long> coeffs, std::size_t order) {
  if (order == 0) throw Error(ErrorKind::invalid_argument, "series order must be >= 1");
  std::vector<Rational> out(order);
  std::size_t n = 0;
  for (long c : coeffs) {
    if (n == order) break;
    out[n++] = c;
  }
  return Series::make(std::move(out));
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("coeffs") ||
      !doc["order"].is_number_unsigned() || !doc["coeffs"].is_array()) {
    throw Error(ErrorKind::parse_failure, "series JSON needs unsigned 'order' and array 'coeffs'");
  }
  const auto order = doc["order"].get<std::size_t>();
  const auto& list = doc["coeffs"];
  if (list.size() != order) {
    throw Error(ErrorKind::parse_failure, "series JSON: coeffs length differs from order");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(order);
  for (const auto& c : list) {
    if (!c.is_string()) throw Error(ErrorKind::parse_failure, "series JSON: coefficients must be strings");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Series::make(std::move(coeffs));
}

}  // namespace lattice
