#include <doctest.h>

#include <random>

#include "lattice/error.hpp"
#include "lattice/riordan.hpp"
#include "oracles.hpp"

using namespace lattice;

namespace {

std::vector<Rational> q(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

std::vector<Rational> coeffs_of(const Series& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected lattice::Error");
  return ErrorKind::inconsistency;
}

std::vector<Rational> central_binomials(std::size_t k) {
  std::vector<Rational> u;
  for (std::size_t d = 0; d < k; ++d) u.emplace_back(oracle::binom(2 * static_cast<long>(d), static_cast<long>(d)));
  return u;
}

std::vector<Rational> catalans(std::size_t k) {
  std::vector<Rational> u;
  for (std::size_t d = 0; d < k; ++d) {
    u.emplace_back(oracle::binom(2 * static_cast<long>(d), static_cast<long>(d)) / (d + 1));
  }
  return u;
}

// Entry formula for each named binomial array, evaluated with the test-side binomial.
mpz_class binomial_entry(NamedArray a, long n, long d) {
  switch (a) {
    case NamedArray::delannoy: return oracle::binom(n + d, n - d);
    case NamedArray::motzkin: return oracle::binom(n, 2 * d);
    case NamedArray::uh_insertion: return oracle::binom(n - d, d);
    case NamedArray::pascal: return oracle::binom(n, d);
    case NamedArray::identity: return n == d ? 1 : 0;
  }
  return -1;
}

constexpr NamedArray kBinomialArrays[] = {NamedArray::delannoy, NamedArray::motzkin, NamedArray::uh_insertion,
                                       NamedArray::pascal};

}  // namespace

TEST_CASE("construction") {
  const RiordanArray id(Series::constant(1, 6), Series::constant(1, 6));
  for (std::size_t n = 0; n < 6; ++n)
    for (std::size_t d = 0; d <= n; ++d) CHECK(id.entry(n, d) == (n == d ? 1 : 0));

  const RiordanArray pascal(geometric(8), geometric(8));
  for (long n = 0; n < 8; ++n)
    for (long d = 0; d <= n; ++d) CHECK(pascal.entry(n, d) == Rational(oracle::binom(n, d)));

  const RiordanArray delannoy(geometric(8), binomial_series(2, 8));
  for (long n = 0; n < 8; ++n)
    for (long d = 0; d <= n; ++d) CHECK(delannoy.entry(n, d) == Rational(oracle::binom(n + d, n - d)));

  CHECK(kind_of([] { RiordanArray(Series::zero(3), geometric(3)); }) == ErrorKind::invalid_array);
  CHECK(kind_of([] { RiordanArray(geometric(3), shift(geometric(3), 1)); }) == ErrorKind::invalid_array);
  CHECK(kind_of([] { RiordanArray(geometric(3), geometric(4)); }) == ErrorKind::invalid_argument);
  CHECK(kind_of([] { RiordanArray::with_vanishing_g(geometric(3), Series::zero(3)); }) == ErrorKind::invalid_array);
  CHECK(kind_of([] { RiordanArray::with_vanishing_g(Series::zero(3), geometric(3)); }) == ErrorKind::invalid_array);
  CHECK(RiordanArray::with_vanishing_g(geometric(1), Series::zero(1)).entry(0, 0) == 1);
}

TEST_CASE("entry") {
  const auto delannoy = delannoy_array(6);
  CHECK(delannoy.entry(0, 0) == 1);
  // x/(1-x)^3 expanded with integer polynomials: [x^2] = 3.
  const auto x_over_cube = oracle::poly_mul({0, 1}, oracle::poly_pow(oracle::ones(6), 3, 6), 6);
  CHECK(x_over_cube[2] == 3);
  CHECK(delannoy.entry(2, 1) == Rational(x_over_cube[2]));

  // [x^5] (1/(1-x)) (x * x/(1-x)^2)^2 by brute-force polynomial expansion.
  const auto inner = oracle::poly_mul({0, 0, 1}, oracle::poly_pow(oracle::ones(6), 2, 6), 6);
  const auto column2 = oracle::poly_mul(oracle::ones(6), oracle::poly_pow(inner, 2, 6), 6);
  CHECK(column2[5] == 5);
  CHECK(motzkin_array(6).entry(5, 2) == Rational(column2[5]));

  CHECK(kind_of([&] { (void)delannoy.entry(6, 0); }) == ErrorKind::out_of_precision);
  CHECK(kind_of([&] { (void)delannoy.entry(2, 3); }) == ErrorKind::invalid_index);
}

TEST_CASE("row and column_gf") {
  const auto pascal = pascal_array(6);
  CHECK(pascal.row(3) == q({1, 3, 3, 1}));
  CHECK(pascal.column_gf(0) == pascal.f());
  CHECK(coeffs_of(pascal.column_gf(1)) == q({0, 1, 2, 3, 4, 5}));
  CHECK(delannoy_array(5).column_gf(0) == geometric(5));
  CHECK(kind_of([&] { (void)pascal.row(6); }) == ErrorKind::out_of_precision);
  CHECK(kind_of([&] { (void)pascal.column_gf(6); }) == ErrorKind::out_of_precision);
}

TEST_CASE("transform") {
  const Series a = from_integers({2, -1, 5, 3, 8}, 5);
  CHECK(identity_array(5).transform(a) == a);
  CHECK(coeffs_of(delannoy_array(5).transform(Series::make(central_binomials(5)))) == q({1, 3, 13, 63, 321}));
  CHECK(coeffs_of(motzkin_array(6).transform(Series::make(catalans(6)))) == q({1, 1, 2, 4, 9, 21}));
  CHECK(kind_of([] { (void)pascal_array(5).transform(geometric(4)); }) == ErrorKind::invalid_argument);
  CHECK(pascal_array(4).transform(geometric(9)).order() == 4);
}

TEST_CASE("row_apply") {
  const auto u = q({4, -2, 7, 1, 0, 3});
  CHECK(identity_array(6).row_apply(u) == u);
  CHECK(delannoy_array(4).row_apply(central_binomials(4)) == q({1, 3, 13, 63}));
  CHECK(pascal_array(5).row_apply(catalans(5)) == q({1, 2, 5, 15, 51}));
  CHECK(kind_of([] { (void)pascal_array(5).row_apply(catalans(4)); }) == ErrorKind::invalid_argument);
}

TEST_CASE("named arrays") {
  CHECK(delannoy_array(3).entry(1, 1) == 1);
  CHECK(motzkin_array(5).entry(4, 1) == 6);
  CHECK(uh_insertion_array(6).entry(5, 2) == 3);
  for (auto a : kBinomialArrays) {
    CHECK(parse_named_array(to_string(a)) == a);
  }
  CHECK(parse_named_array("uh") == NamedArray::uh_insertion);
  CHECK_FALSE(parse_named_array("catalan").has_value());
}

TEST_CASE("Named arrays match their binomials for n <= 30") {
  for (auto a : kBinomialArrays) {
    const auto tri = make_named_array(a, 31).triangle(31);
    for (long n = 0; n <= 30; ++n) {
      for (long d = 0; d <= n; ++d) {
        INFO("array=" << to_string(a) << " n=" << n << " d=" << d);
        CHECK(tri[n][d] == Rational(binomial_entry(a, n, d)));
      }
    }
  }
  // Single-entry extraction agrees with the dense triangle.
  const auto uh = uh_insertion_array(12);
  for (long n = 0; n < 12; ++n)
    for (long d = 0; d <= n; ++d) CHECK(uh.entry(n, d) == Rational(binomial_entry(NamedArray::uh_insertion, n, d)));
}

TEST_CASE("row_apply equals the coefficients of transform") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 24; ++trial) {
    const std::size_t order = 1 + (trial * 5) % 32;
    const Series u = oracle::random_series(rng, order);
    for (auto a : kBinomialArrays) {
      const auto v = make_named_array(a, order);
      CHECK(v.row_apply(u.coeffs()) == coeffs_of(v.transform(u)));
    }
  }
}

TEST_CASE("triangularity and column valuations") {
  const std::size_t order = 16;
  for (auto a : kBinomialArrays) {
    const auto arr = make_named_array(a, order);
    const auto tri = arr.triangle(order);
    for (long n = 0; n < static_cast<long>(order); ++n) {
      for (long d = 0; d <= n; ++d) {
        CHECK((tri[n][d] == 0) == (binomial_entry(a, n, d) == 0));
      }
    }
    for (std::size_t d = 0; d < order; ++d) CHECK(arr.column_gf(d).valuation() >= d);
  }
}

TEST_CASE("transform is linear") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t order = 2 + trial;
    const Series a = oracle::random_series(rng, order);
    const Series b = oracle::random_series(rng, order);
    const Rational k(trial - 5, 4);
    for (auto name : kBinomialArrays) {
      const auto t = make_named_array(name, order);
      CHECK(t.transform(k * a + b) == k * t.transform(a) + t.transform(b));
    }
  }
}
