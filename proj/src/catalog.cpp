#include "lattice/catalog.hpp"

#include <array>
#include <string>

#include "lattice/error.hpp"

namespace lattice::catalog {

namespace {

using paths::Flat;

constexpr std::array<unsigned long, 9> kCentral{1, 2, 6, 20, 70, 252, 924, 3432, 12870};
constexpr std::array<unsigned long, 9> kDyck{1, 1, 2, 5, 14, 42, 132, 429, 1430};
constexpr std::array<unsigned long, 8> kDelannoy{1, 3, 13, 63, 321, 1683, 8989, 48639};
constexpr std::array<unsigned long, 8> kSchroeder{1, 2, 6, 22, 90, 394, 1806, 8558};
constexpr std::array<unsigned long, 10> kBigMotzkin{1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139};
constexpr std::array<unsigned long, 10> kMotzkin{1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
constexpr std::array<unsigned long, 11> kAvoidFlatBigMotzkin{1, 1, 3, 5, 13, 27, 67, 153, 375, 893, 2189};
constexpr std::array<unsigned long, 11> kAvoidFlatMotzkin{1, 1, 2, 3, 6, 11, 23, 47, 102, 221, 493};
constexpr std::array<unsigned long, 8> kAvoidFlatDelannoy{1, 3, 11, 45, 195, 873, 3989, 18483};
constexpr std::array<unsigned long, 8> kAvoidFlatSchroeder{1, 2, 5, 15, 51, 188, 731, 2950};

constexpr auto kCB = BaseSequence::central_binomial;
constexpr auto kCat = BaseSequence::catalan;

const std::array<FamilyInfo, 10> kFamilies{{
    {FamilyId::central, "central", "A000984", NamedArray::identity, kCB, false, Flat::none, false, 0, kCentral},
    {FamilyId::dyck, "dyck", "A000108", NamedArray::identity, kCat, true, Flat::none, false, 0, kDyck},
    {FamilyId::delannoy, "delannoy", "A001850", NamedArray::delannoy, kCB, false, Flat::horizontal, false, 0, kDelannoy},
    {FamilyId::schroeder, "schroeder", "A006318", NamedArray::delannoy, kCat, true, Flat::horizontal, false, 0, kSchroeder},
    {FamilyId::big_motzkin, "big_motzkin", "A002426", NamedArray::motzkin, kCB, false, Flat::forward, false, 0, kBigMotzkin},
    {FamilyId::motzkin, "motzkin", "A001006", NamedArray::motzkin, kCat, true, Flat::forward, false, 0, kMotzkin},
    {FamilyId::avoid_flat_big_motzkin, "avoid_flat_big_motzkin", "A026569", NamedArray::uh_insertion, kCB, false,
     Flat::forward, true, 0, kAvoidFlatBigMotzkin},
    {FamilyId::avoid_flat_motzkin, "avoid_flat_motzkin", "A090344", NamedArray::uh_insertion, kCat, true,
     Flat::forward, true, 0, kAvoidFlatMotzkin},
    {FamilyId::avoid_flat_delannoy, "avoid_flat_delannoy", "A026375", NamedArray::pascal, kCB, false,
     Flat::horizontal, true, 0, kAvoidFlatDelannoy},
    {FamilyId::avoid_flat_schroeder, "avoid_flat_schroeder", "A007317", NamedArray::pascal, kCat, true,
     Flat::horizontal, true, 0, kAvoidFlatSchroeder},
}};

// Radicand P(x) of the closed form: 1/sqrt(P) or 2/(c + sqrt(P)).
Series radicand(NamedArray array, std::size_t order) {
  switch (array) {
    case NamedArray::identity: return from_integers({1, -4}, order);
    case NamedArray::delannoy: return from_integers({1, -6, 1}, order);
    case NamedArray::motzkin: return from_integers({1, -2, -3}, order);
    case NamedArray::uh_insertion: return from_integers({1, -2, -3, 4}, order);
    case NamedArray::pascal: return from_integers({1, -6, 5}, order);
  }
  throw Error(ErrorKind::invalid_argument, "unknown array");
}

void require_equal(const Series& expected, const Series& got, FamilyId id, std::string_view what) {
  for (std::size_t n = 0; n < expected.order(); ++n) {
    if (expected.coeffs()[n] != got.coeffs()[n]) {
      throw Error(ErrorKind::inconsistency,
                  std::string(info(id).key) + ": " + std::string(what) + " differs at n=" + std::to_string(n) +
                      " (" + lattice::to_string(expected.coeffs()[n]) + " vs " + lattice::to_string(got.coeffs()[n]) + ")");
    }
  }
}

Integer to_integer(const Rational& value, FamilyId id, std::size_t n) {
  if (!is_integer(value)) {
    throw Error(ErrorKind::inconsistency, std::string(info(id).key) + ": non-integral term " +
                                              lattice::to_string(value) + " at n=" + std::to_string(n));
  }
  return value.get_num();
}

}  // namespace

std::span<const FamilyInfo> families() noexcept { return kFamilies; }

const FamilyInfo& info(FamilyId id) noexcept { return kFamilies[static_cast<std::size_t>(id)]; }

std::optional<FamilyId> find_family(std::string_view key_or_oeis) noexcept {
  for (const auto& f : kFamilies) {
    if (key_or_oeis == f.key || key_or_oeis == f.oeis) return f.id;
  }
  return std::nullopt;
}

paths::PathFamily path_family(FamilyId id, unsigned n) {
  const auto& f = info(id);
  return {.flat = f.flat,
          .span = f.flat == Flat::forward ? n : 2 * n,
          .nonpositive = f.constrained,
          .forbid_up_then_flat = f.forbid_up_then_flat};
}

Integer central_binomial(unsigned n) { return binomial(2L * n, n); }

Integer catalan(unsigned n) {
  Integer c = central_binomial(n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), n + 1UL);
  return c;
}

Integer base_term(BaseSequence base, unsigned d) {
  return base == BaseSequence::catalan ? catalan(d) : central_binomial(d);
}

Integer array_binomial(NamedArray array, long n, long d) {
  switch (array) {
    case NamedArray::identity: return n == d ? 1 : 0;
    case NamedArray::delannoy: return binomial(n + d, n - d);
    case NamedArray::motzkin: return binomial(n, 2 * d);
    case NamedArray::uh_insertion: return binomial(n - d, d);
    case NamedArray::pascal: return binomial(n, d);
  }
  return 0;
}

Integer formula_term(FamilyId id, unsigned n) {
  const auto& f = info(id);
  Integer total = 0;
  // Out-of-range binomials vanish, so d runs over the full 0..n.
  for (unsigned d = 0; d <= n; ++d) {
    total += array_binomial(f.array, n, d) * base_term(f.base, d);
  }
  return total;
}

Series base_gf(BaseSequence base, std::size_t order) {
  const Series root = sqrt(from_integers({1, -4}, order));
  const Series one = Series::constant(1, order);
  if (base == BaseSequence::central_binomial) return div(one, root);
  return div(Series::constant(2, order), add(one, root));
}

Series gf_closed_form(FamilyId id, std::size_t order) {
  const auto& f = info(id);
  const Series root = sqrt(radicand(f.array, order));
  if (!f.constrained) return div(Series::constant(1, order), root);
  const Series lead = f.array == NamedArray::identity ? Series::constant(1, order) : from_integers({1, -1}, order);
  return div(Series::constant(2, order), add(lead, root));
}

Series gf_composed(FamilyId id, std::size_t order) {
  const auto& f = info(id);
  return make_named_array(f.array, order).transform(base_gf(f.base, order));
}

Series gf(FamilyId id, std::size_t order) {
  Series closed = gf_closed_form(id, order);
  require_equal(closed, gf_composed(id, order), id, "composed form");
  if (id == FamilyId::avoid_flat_big_motzkin) {
    const Series factored = div(Series::constant(1, order),
                                mul(sqrt(from_integers({1, -1}, order)), sqrt(from_integers({1, -1, -4}, order))));
    require_equal(closed, factored, id, "factored radical");
  }
  for (std::size_t n = 0; n < order; ++n) to_integer(closed.coeffs()[n], id, n);
  return closed;
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::formula: return "formula";
    case Method::gf: return "gf";
    case Method::riordan: return "riordan";
    case Method::brute: return "brute";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  for (auto m : {Method::formula, Method::gf, Method::riordan, Method::brute}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<Integer> terms(FamilyId id, std::size_t k, Method method) {
  if (k == 0) throw Error(ErrorKind::invalid_argument, "at least one term must be requested");
  const auto& f = info(id);
  std::vector<Integer> out;
  out.reserve(k);
  switch (method) {
    case Method::formula:
      for (std::size_t n = 0; n < k; ++n) out.push_back(formula_term(id, static_cast<unsigned>(n)));
      break;
    case Method::gf: {
      const Series s = gf(id, k);
      for (std::size_t n = 0; n < k; ++n) out.push_back(to_integer(s.coeffs()[n], id, n));
      break;
    }
    case Method::riordan: {
      std::vector<Rational> u;
      u.reserve(k);
      for (std::size_t d = 0; d < k; ++d) u.emplace_back(base_term(f.base, static_cast<unsigned>(d)));
      const auto v = make_named_array(f.array, k).row_apply(u);
      for (std::size_t n = 0; n < k; ++n) out.push_back(to_integer(v[n], id, n));
      break;
    }
    case Method::brute:
      if (path_family(id, static_cast<unsigned>(k - 1)).span > paths::kMaxEnumerationSpan) {
        throw Error(ErrorKind::resource_limit, "brute force is limited to span " +
                                                   std::to_string(paths::kMaxEnumerationSpan) + " (" +
                                                   std::string(f.key) + ", n=" + std::to_string(k - 1) + ")");
      }
      for (std::size_t n = 0; n < k; ++n) out.push_back(paths::count(path_family(id, static_cast<unsigned>(n))));
      break;
  }
  return out;
}

}  // namespace lattice::catalog
