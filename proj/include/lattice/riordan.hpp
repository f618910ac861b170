#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lattice/series.hpp"

namespace lattice {

/// Riordan array (f | g): the lower-triangular array whose column d has
/// generating function f(x) (x g(x))^d, so b_{n,d} = [x^n] f (x g)^d.
///
/// Entries are extracted from (f, g) on demand; nothing is cached. The
/// truncation order is fixed at construction and every index must be below
/// it.
class RiordanArray {
 public:
  /// Throws Error(invalid_array) when f(0) or g(0) is zero and
  /// Error(invalid_argument) when the orders differ.
  RiordanArray(Series f, Series g);

  /// Same, but g(0) = 0 is accepted as long as g is not the zero series
  /// (at order 1 every such g truncates to zero and is accepted).
  /// The array stays lower triangular; its diagonal vanishes beyond (0,0).
  /// The Motzkin and UH-insertion arrays have this shape.
  static RiordanArray with_vanishing_g(Series f, Series g);

  const Series& f() const noexcept { return f_; }
  const Series& g() const noexcept { return g_; }
  std::size_t order() const noexcept { return f_.order(); }

  /// b_{n,d}. Throws Error(out_of_precision) for n >= order() and
  /// Error(invalid_index) for d > n.
  Rational entry(std::size_t n, std::size_t d) const;

  /// b_{n,0}, ..., b_{n,n}.
  std::vector<Rational> row(std::size_t n) const;

  /// f (x g)^d truncated to order().
  Series column_gf(std::size_t d) const;

  /// Column generating functions 0..count-1, built incrementally.
  std::vector<Series> columns(std::size_t count) const;

  /// The first `rows` rows as a dense triangle.
  std::vector<std::vector<Rational>> triangle(std::size_t rows) const;

  /// B(x) = f(x) A(x g(x)), truncated to order(). Throws
  /// Error(invalid_argument) when a.order() < order().
  Series transform(const Series& a) const;

  /// v_n = sum_{d=0}^{n} b_{n,d} u_d for n < order(), by direct summation
  /// over entries. Throws Error(invalid_argument) when u is shorter than
  /// order().
  std::vector<Rational> row_apply(std::span<const Rational> u) const;

 private:
  RiordanArray(Series f, Series g, bool allow_vanishing_g);

  Series f_;
  Series g_;
  Series xg_;
};

enum class NamedArray { identity, delannoy, motzkin, uh_insertion, pascal };

std::string_view to_string(NamedArray array) noexcept;
std::optional<NamedArray> parse_named_array(std::string_view name) noexcept;

/// (1 | 1): b_{n,d} = [n = d].
RiordanArray identity_array(std::size_t order);
/// (1/(1-x) | 1/(1-x)^2): binom(n+d, n-d).
RiordanArray delannoy_array(std::size_t order);
/// (1/(1-x) | x/(1-x)^2): binom(n, 2d).
RiordanArray motzkin_array(std::size_t order);
/// (1/(1-x) | x/(1-x)): binom(n-d, d).
RiordanArray uh_insertion_array(std::size_t order);
/// (1/(1-x) | 1/(1-x)): binom(n, d).
RiordanArray pascal_array(std::size_t order);

RiordanArray make_named_array(NamedArray array, std::size_t order);

}  // namespace lattice
