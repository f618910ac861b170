// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <gmpxx.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lattice/catalog.hpp"
#include "lattice/error.hpp"
#include "lattice/oeis.hpp"
#include "lattice/paths.hpp"
#include "lattice/riordan.hpp"
#include "lattice/series.hpp"
#include "oracles.hpp"

using namespace lattice;
using catalog::FamilyId;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string str(const mpz_class& v) { return v.get_str(); }
std::string str(const mpq_class& v) { return v.get_str(); }

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& where) {
  if (got != want) {
    std::ostringstream os;
    os << where << ": expected " << str(want) << ", got " << str(got);
    throw Failure{os.str()};
  }
}

std::string key(FamilyId id) { return std::string(catalog::info(id).key); }

// Criterion 1 values, transcribed independently of the catalog table.
const std::vector<std::pair<FamilyId, std::vector<long>>> kDisplays{
    {FamilyId::central, {1, 2, 6, 20, 70, 252, 924, 3432, 12870}},
    {FamilyId::dyck, {1, 1, 2, 5, 14, 42, 132, 429, 1430}},
    {FamilyId::delannoy, {1, 3, 13, 63, 321, 1683, 8989, 48639}},
    {FamilyId::schroeder, {1, 2, 6, 22, 90, 394, 1806, 8558}},
    {FamilyId::big_motzkin, {1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139}},
    {FamilyId::motzkin, {1, 1, 2, 4, 9, 21, 51, 127, 323, 835}},
    {FamilyId::avoid_flat_big_motzkin, {1, 1, 3, 5, 13, 27, 67, 153, 375, 893, 2189}},
    {FamilyId::avoid_flat_motzkin, {1, 1, 2, 3, 6, 11, 23, 47, 102, 221, 493}},
    {FamilyId::avoid_flat_delannoy, {1, 3, 11, 45, 195, 873, 3989, 18483}},
    {FamilyId::avoid_flat_schroeder, {1, 2, 5, 15, 51, 188, 731, 2950}},
};

const std::vector<std::pair<std::string, std::string>> kOeis{
    {"central", "A000984"},          {"dyck", "A000108"},
    {"delannoy", "A001850"},         {"schroeder", "A006318"},
    {"big_motzkin", "A002426"},      {"motzkin", "A001006"},
    {"avoid_flat_big_motzkin", "A026569"}, {"avoid_flat_motzkin", "A090344"},
    {"avoid_flat_delannoy", "A026375"},    {"avoid_flat_schroeder", "A007317"},
};

std::size_t prefix_fidelity() {
  std::size_t cases = 0;
  for (const auto& [id, display] : kDisplays) {
    for (const auto method : {catalog::Method::formula, catalog::Method::gf, catalog::Method::riordan}) {
      const auto t = catalog::terms(id, display.size(), method);
      for (std::size_t n = 0; n < display.size(); ++n, ++cases) {
        expect_eq(t[n], mpz_class(display[n]),
                  key(id) + " " + std::string(catalog::to_string(method)) + " n=" + std::to_string(n));
      }
    }
  }
  return cases;
}

unsigned brute_limit(FamilyId id) {
  switch (catalog::info(id).flat) {
    case paths::Flat::none: return 8;
    case paths::Flat::horizontal: return 6;
    case paths::Flat::forward: return 12;
  }
  return 0;
}

std::size_t method_agreement() {
  std::size_t cases = 0;
  for (const auto& f : catalog::families()) {
    const auto formula = catalog::terms(f.id, 50, catalog::Method::formula);
    const auto gf = catalog::terms(f.id, 50, catalog::Method::gf);
    const auto riordan = catalog::terms(f.id, 50, catalog::Method::riordan);
    const auto brute = catalog::terms(f.id, brute_limit(f.id) + 1, catalog::Method::brute);
    for (std::size_t n = 0; n < 50; ++n, ++cases) {
      const std::string at = key(f.id) + " n=" + std::to_string(n);
      expect_eq(gf[n], formula[n], at + " gf");
      expect_eq(riordan[n], formula[n], at + " riordan");
      if (n < brute.size()) expect_eq(brute[n], formula[n], at + " brute");
    }
  }
  return cases;
}

mpz_class binomial_entry(NamedArray a, long n, long d) {
  switch (a) {
    case NamedArray::delannoy: return oracle::binom(n + d, n - d);
    case NamedArray::motzkin: return oracle::binom(n, 2 * d);
    case NamedArray::uh_insertion: return oracle::binom(n - d, d);
    case NamedArray::pascal: return oracle::binom(n, d);
    case NamedArray::identity: return n == d ? 1 : 0;
  }
  return 0;
}

std::size_t binomial_arrays() {
  std::size_t cases = 0;
  for (const auto a : {NamedArray::delannoy, NamedArray::motzkin, NamedArray::uh_insertion, NamedArray::pascal}) {
    const auto array = make_named_array(a, 31);
    for (long n = 0; n <= 30; ++n)
      for (long d = 0; d <= n; ++d, ++cases)
        expect_eq(array.entry(n, d), mpq_class(binomial_entry(a, n, d)),
                  std::string(to_string(a)) + " b(" + std::to_string(n) + "," + std::to_string(d) + ")");
  }
  return cases;
}

std::size_t central_binomial_series() {
  std::size_t cases = 0;
  const Series radicand = from_integers({1, -4}, 64);
  const Series inv = Series::constant(1, 64) / sqrt(radicand);
  for (std::size_t n = 0; n < 64; ++n, ++cases)
    expect_eq(inv.coeff(n), mpq_class(oracle::binom(2 * n, n)), "1/sqrt(1-4x) n=" + std::to_string(n));
  for (long n = 0; n <= 20; ++n, ++cases) {
    mpz_class sum = 0;
    for (long i = 0; i <= n; ++i) sum += oracle::binom(2 * i, i) * oracle::binom(2 * (n - i), n - i);
    mpz_class four = 1;
    for (long i = 0; i < n; ++i) four *= 4;
    expect_eq(sum, four, "convolution n=" + std::to_string(n));
  }
  return cases;
}

std::size_t catalan_and_reflection() {
  std::size_t cases = 0;
  for (long n = 0; n <= 30; ++n, ++cases) {
    const mpz_class c = catalog::catalan(n);
    const mpz_class b = oracle::binom(2 * n, n);
    const std::string at = "n=" + std::to_string(n);
    expect_eq(mpz_class(b - oracle::binom(2 * n, n - 1)), c, "difference form " + at);
    expect_eq(oracle::ratio(b, n + 1), mpq_class(c), "quotient form " + at);
    expect_eq(mpq_class(2 * b) - oracle::ratio(oracle::binom(2 * n + 2, n + 1), 2), mpq_class(c), "shifted form " + at);
  }
  for (unsigned n = 1; n <= 7; ++n) {
    std::set<paths::Path> images;
    std::size_t preimages = 0;
    for (const auto& p : paths::enumerate(catalog::path_family(FamilyId::central, n))) {
      bool rises = false;
      for (const auto& pt : p.points()) rises = rises || pt.y > 0;
      if (!rises) continue;
      ++preimages;
      const auto image = paths::reflect_first_crossing(p);
      expect(image.steps.size() == 2 * n, "reflection changes length at n=" + std::to_string(n));
      images.insert(image);
    }
    expect(images.size() == preimages, "reflection not injective at n=" + std::to_string(n));
    expect_eq(mpz_class(images.size()), oracle::binom(2 * n, n - 1), "reflection image size n=" + std::to_string(n));
    ++cases;
  }
  return cases;
}

// Composed and radical forms, assembled here from series primitives only.
std::size_t gf_equivalence() {
  constexpr std::size_t N = 40;
  const Series one = Series::constant(1, N);
  const Series x = Series::variable(N);
  const Series inv1mx = one / (one - x);
  const auto central = [&](const Series& t) { return one / sqrt(one - 4 * t); };
  const auto catalan = [&](const Series& t) { return 2 * one / (one + sqrt(one - 4 * t)); };
  const auto radicand = [&](std::initializer_list<long> c) { return from_integers(c, N); };

  struct Case {
    FamilyId id;
    Series xg;
    bool constrained;
    Series closed;
  };
  const Series delannoy_xg = x * inv1mx * inv1mx;
  const Series motzkin_xg = x * x * inv1mx * inv1mx;
  const Series uh_xg = x * x * inv1mx;
  const Series pascal_xg = x * inv1mx;
  const std::vector<Case> cases{
      {FamilyId::delannoy, delannoy_xg, false, one / sqrt(radicand({1, -6, 1}))},
      {FamilyId::schroeder, delannoy_xg, true, 2 * one / (one - x + sqrt(radicand({1, -6, 1})))},
      {FamilyId::big_motzkin, motzkin_xg, false, one / sqrt(radicand({1, -2, -3}))},
      {FamilyId::motzkin, motzkin_xg, true, 2 * one / (one - x + sqrt(radicand({1, -2, -3})))},
      {FamilyId::avoid_flat_big_motzkin, uh_xg, false, one / sqrt(radicand({1, -2, -3, 4}))},
      {FamilyId::avoid_flat_motzkin, uh_xg, true, 2 * one / (one - x + sqrt(radicand({1, -2, -3, 4})))},
      {FamilyId::avoid_flat_delannoy, pascal_xg, false, one / sqrt(radicand({1, -6, 5}))},
      {FamilyId::avoid_flat_schroeder, pascal_xg, true, 2 * one / (one - x + sqrt(radicand({1, -6, 5})))},
  };
  std::size_t checked = 0;
  for (const auto& c : cases) {
    const Series composed = inv1mx * (c.constrained ? catalan(c.xg) : central(c.xg));
    const Series library = catalog::gf(c.id, N);
    for (std::size_t n = 0; n < N; ++n, ++checked) {
      const std::string at = key(c.id) + " [x^" + std::to_string(n) + "]";
      expect_eq(c.closed.coeff(n), composed.coeff(n), at + " closed vs composed");
      expect_eq(library.coeff(n), composed.coeff(n), at + " library");
      expect(c.closed.coeff(n).get_den() == 1, at + " not integral");
    }
  }
  const Series factored = one / (sqrt(one - x) * sqrt(radicand({1, -1, -4})));
  const Series avoid = one / sqrt(radicand({1, -2, -3, 4}));
  for (std::size_t n = 0; n < N; ++n, ++checked)
    expect_eq(factored.coeff(n), avoid.coeff(n), "factored avoid_flat_big_motzkin [x^" + std::to_string(n) + "]");
  return checked;
}

std::size_t enumerated_counts() {
  const auto size = [](FamilyId id, unsigned n) {
    return mpz_class(paths::enumerate(catalog::path_family(id, n)).size());
  };
  expect_eq(size(FamilyId::delannoy, 2), mpz_class(13), "central Delannoy n=2");
  expect_eq(size(FamilyId::schroeder, 2), mpz_class(6), "Schroeder n=2");
  expect_eq(size(FamilyId::motzkin, 5), mpz_class(21), "Motzkin length 5");
  const mpz_class big = size(FamilyId::big_motzkin, 5);
  expect_eq(big, mpz_class(51), "big Motzkin length 5");
  expect_eq(mpz_class(big - 21), mpz_class(30), "big Motzkin paths rising above the axis");
  return 5;
}

std::size_t down_buckets() {
  std::size_t cases = 0;
  for (const auto& f : catalog::families()) {
    for (unsigned n = 0; n <= 7; ++n) {
      const auto buckets = paths::count_by_downs(catalog::path_family(f.id, n));
      for (unsigned d = 0; d <= 2 * n; ++d, ++cases) {
        const mpz_class base = f.constrained ? mpz_class(oracle::binom(2 * d, d) / (d + 1)) : oracle::binom(2 * d, d);
        const mpz_class want = binomial_entry(f.array, n, d) * base;
        const auto it = buckets.find(d);
        const mpz_class got = it == buckets.end() ? mpz_class(0) : it->second;
        expect_eq(got, want, key(f.id) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
      for (const auto& [d, c] : buckets) expect(d <= 2 * n, key(f.id) + " impossible bucket");
    }
  }
  return cases;
}

std::size_t oeis_fixtures() {
  oeis::OfflineTransport offline;
  std::size_t cases = 0;
  for (const auto& [family, id] : kOeis) {
    const auto fid = catalog::find_family(family);
    expect(fid.has_value() && catalog::info(*fid).oeis == id, family + " is not " + id);
    const auto report = oeis::compare(*fid, 100, LATTICE_FIXTURE_DIR, offline);
    expect(report.agree(), oeis::format_report(report));
    expect(report.compared == 100, id + " compared only " + std::to_string(report.compared));
    cases += report.compared;
  }
  return cases;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::size_t()>>> criteria{
      {"1 prefix-fidelity", prefix_fidelity},
      {"2 method-agreement", method_agreement},
      {"3 riordan-binomial-arrays", binomial_arrays},
      {"4 inverse-sqrt-and-convolution", central_binomial_series},
      {"5 catalan-identities-and-reflection", catalan_and_reflection},
      {"6 gf-equivalence", gf_equivalence},
      {"7 enumerated-counts", enumerated_counts},
      {"8 down-step-buckets", down_buckets},
      {"9 oeis-fixtures", oeis_fixtures},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = std::to_string(check()) + " cases";
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (ok ? "PASS  " : "FAIL  ") << name << "  (" << detail << ", " << ms.count() << " ms)\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all 9 criteria passed\n"
                              : "acceptance: " + std::to_string(failures) + " criteria failed\n");
  return failures == 0 ? 0 : 1;
}
