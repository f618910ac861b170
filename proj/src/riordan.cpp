#include "lattice/riordan.hpp"

#include <string>

#include "lattice/error.hpp"

namespace lattice {

RiordanArray::RiordanArray(Series f, Series g, bool allow_vanishing_g)
    : f_(std::move(f)), g_(std::move(g)), xg_(shift(g_, 1)) {
  if (f_.order() != g_.order()) {
    throw Error(ErrorKind::invalid_argument,
                "Riordan pair orders differ: " + std::to_string(f_.order()) + " vs " +
                    std::to_string(g_.order()));
  }
  if (f_.coeffs()[0] == 0) {
    throw Error(ErrorKind::invalid_array, "Riordan pair needs f(0) != 0");
  }
  if (allow_vanishing_g ? g_.is_zero() && g_.order() > 1 : g_.coeffs()[0] == 0) {
    throw Error(ErrorKind::invalid_array,
                allow_vanishing_g ? "Riordan pair needs g != 0" : "Riordan pair needs g(0) != 0");
  }
}

RiordanArray::RiordanArray(Series f, Series g) : RiordanArray(std::move(f), std::move(g), false) {}

RiordanArray RiordanArray::with_vanishing_g(Series f, Series g) {
  return RiordanArray(std::move(f), std::move(g), true);
}

Rational RiordanArray::entry(std::size_t n, std::size_t d) const {
  if (n >= order()) {
    throw Error(ErrorKind::out_of_precision,
                "row " + std::to_string(n) + " is beyond order " + std::to_string(order()));
  }
  if (d > n) {
    throw Error(ErrorKind::invalid_index,
                "column " + std::to_string(d) + " exceeds row " + std::to_string(n));
  }
  return column_gf(d).coeff(n);
}

std::vector<Rational> RiordanArray::row(std::size_t n) const {
  if (n >= order()) {
    throw Error(ErrorKind::out_of_precision,
                "row " + std::to_string(n) + " is beyond order " + std::to_string(order()));
  }
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (const auto& column : columns(n + 1)) out.push_back(column.coeff(n));
  return out;
}

Series RiordanArray::column_gf(std::size_t d) const {
  if (d >= order()) {
    throw Error(ErrorKind::out_of_precision,
                "column " + std::to_string(d) + " is beyond order " + std::to_string(order()));
  }
  return mul(f_, pow(xg_, d));
}

std::vector<Series> RiordanArray::columns(std::size_t count) const {
  if (count > order()) {
    throw Error(ErrorKind::out_of_precision,
                std::to_string(count) + " columns requested at order " + std::to_string(order()));
  }
  std::vector<Series> out;
  out.reserve(count);
  for (std::size_t d = 0; d < count; ++d) {
    out.push_back(d == 0 ? f_ : mul(out.back(), xg_));
  }
  return out;
}

std::vector<std::vector<Rational>> RiordanArray::triangle(std::size_t rows) const {
  const auto cols = columns(rows);
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    out[n].reserve(n + 1);
    for (std::size_t d = 0; d <= n; ++d) out[n].push_back(cols[d].coeff(n));
  }
  return out;
}

Series RiordanArray::transform(const Series& a) const {
  if (a.order() < order()) {
    throw Error(ErrorKind::invalid_argument,
                "transform input of order " + std::to_string(a.order()) +
                    " is shorter than the array order " + std::to_string(order()));
  }
  return mul(f_, compose(a.truncate(order()), xg_));
}

std::vector<Rational> RiordanArray::row_apply(std::span<const Rational> u) const {
  if (u.size() < order()) {
    throw Error(ErrorKind::invalid_argument,
                "row_apply needs " + std::to_string(order()) + " input terms, got " +
                    std::to_string(u.size()));
  }
  const auto cols = columns(order());
  std::vector<Rational> v(order());
  for (std::size_t n = 0; n < order(); ++n) {
    for (std::size_t d = 0; d <= n; ++d) v[n] += cols[d].coeff(n) * u[d];
  }
  return v;
}

std::string_view to_string(NamedArray array) noexcept {
  switch (array) {
    case NamedArray::identity: return "identity";
    case NamedArray::delannoy: return "delannoy";
    case NamedArray::motzkin: return "motzkin";
    case NamedArray::uh_insertion: return "uh";
    case NamedArray::pascal: return "pascal";
  }
  return "unknown";
}

std::optional<NamedArray> parse_named_array(std::string_view name) noexcept {
  for (auto a : {NamedArray::identity, NamedArray::delannoy, NamedArray::motzkin,
                 NamedArray::uh_insertion, NamedArray::pascal}) {
    if (name == to_string(a)) return a;
  }
  if (name == "uh_insertion") return NamedArray::uh_insertion;
  return std::nullopt;
}

RiordanArray identity_array(std::size_t order) {
  return {Series::constant(1, order), Series::constant(1, order)};
}

RiordanArray delannoy_array(std::size_t order) {
  return {geometric(order), binomial_series(2, order)};
}

RiordanArray motzkin_array(std::size_t order) {
  return RiordanArray::with_vanishing_g(geometric(order), shift(binomial_series(2, order), 1));
}

RiordanArray uh_insertion_array(std::size_t order) {
  return RiordanArray::with_vanishing_g(geometric(order), shift(geometric(order), 1));
}

RiordanArray pascal_array(std::size_t order) {
  return {geometric(order), geometric(order)};
}

RiordanArray make_named_array(NamedArray array, std::size_t order) {
  switch (array) {
    case NamedArray::identity: return identity_array(order);
    case NamedArray::delannoy: return delannoy_array(order);
    case NamedArray::motzkin: return motzkin_array(order);
    case NamedArray::uh_insertion: return uh_insertion_array(order);
    case NamedArray::pascal: return pascal_array(order);
  }
  throw Error(ErrorKind::invalid_argument, "unknown named array");
}

}  // namespace lattice
