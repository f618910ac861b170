#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lattice/paths.hpp"
#include "lattice/rational.hpp"
#include "lattice/riordan.hpp"
#include "lattice/series.hpp"

namespace lattice::catalog {

enum class FamilyId {
  central,
  dyck,
  delannoy,
  schroeder,
  big_motzkin,
  motzkin,
  avoid_flat_big_motzkin,
  avoid_flat_motzkin,
  avoid_flat_delannoy,
  avoid_flat_schroeder,
};

/// The sequence u_d fed through a family's Riordan array.
enum class BaseSequence { central_binomial, catalan };

/// Declarative description of one family: v_n = sum_d b_{n,d} u_d with
/// b from `array` and u from `base`, plus the lattice-path model that the
/// brute-force route enumerates.
struct FamilyInfo {
  FamilyId id;
  std::string_view key;
  std::string_view oeis;
  NamedArray array;
  BaseSequence base;
  /// Paths stay at or below the x-axis; the base is Catalan.
  bool constrained;
  paths::Flat flat;
  bool forbid_up_then_flat;
  /// Offset of the first b-file index.
  unsigned offset;
  /// Leading terms as listed in the literature displays.
  std::span<const unsigned long> listed_prefix;
};

std::span<const FamilyInfo> families() noexcept;
const FamilyInfo& info(FamilyId id) noexcept;

/// Accepts a family key ("delannoy") or an OEIS id ("A001850").
std::optional<FamilyId> find_family(std::string_view key_or_oeis) noexcept;

/// Path model for term n: span 2n without F steps, n with them.
paths::PathFamily path_family(FamilyId id, unsigned n);

/// binom(2n, n).
Integer central_binomial(unsigned n);
/// binom(2n, n) / (n + 1).
Integer catalan(unsigned n);

Integer base_term(BaseSequence base, unsigned d);

/// b_{n,d} of the named array, in closed binomial form.
Integer array_binomial(NamedArray array, long n, long d);

/// sum_{d=0}^{n} b_{n,d} u_d via binomials.
Integer formula_term(FamilyId id, unsigned n);

/// A(x) of the base sequence: 1/sqrt(1-4x) or 2/(1+sqrt(1-4x)).
Series base_gf(BaseSequence base, std::size_t order);

/// Simplified radical form, e.g. 1/sqrt(1-6x+x^2) for Delannoy.
Series gf_closed_form(FamilyId id, std::size_t order);

/// f(x) A(x g(x)) with the family's array and base generating function.
Series gf_composed(FamilyId id, std::size_t order);

/// Closed form after asserting coefficientwise equality with the composed
/// form (and, for the avoid-flat big Motzkin family, the factored radical
/// 1/(sqrt(1-x) sqrt(1-x-4x^2))). Throws Error(inconsistency) on any
/// disagreement or a non-integral coefficient.
Series gf(FamilyId id, std::size_t order);

enum class Method { formula, gf, riordan, brute };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

/// Terms n = 0..k-1. The brute method enumerates paths and throws
/// Error(resource_limit) past the enumeration guard.
std::vector<Integer> terms(FamilyId id, std::size_t k, Method method);

}  // namespace lattice::catalog
