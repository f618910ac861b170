#include "lattice/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lattice/error.hpp"
#include "lattice/paths.hpp"
#include "lattice/riordan.hpp"

namespace lattice {

namespace {

using catalog::FamilyId;

template <typename T, typename U>
std::string counterexample(std::string_view what, long n, const T& expected, const U& got) {
  std::ostringstream os;
  os << what << ", n=" << n << ", expected=" << expected << ", got=" << got;
  return os.str();
}

// Records the first failure only; later ones just count as cases.
struct Recorder {
  CheckResult result;

  explicit Recorder(std::string name) { result.name = std::move(name); }

  template <typename T, typename U>
  void expect_eq(const T& expected, const U& got, std::string_view what, long n) {
    ++result.cases;
    if (expected == got) return;
    if (result.passed) result.counterexample = counterexample(what, n, expected, got);
    result.passed = false;
  }

  void fail(std::string message) {
    ++result.cases;
    if (result.passed) result.counterexample = std::move(message);
    result.passed = false;
  }
};

std::string family_label(FamilyId id) { return "family=" + std::string(catalog::info(id).key); }

CheckResult check_prefix_fidelity(const VerifyOptions& opt) {
  Recorder rec("prefix-fidelity");
  for (const auto& f : catalog::families()) {
    const std::size_t k = std::min<std::size_t>(f.listed_prefix.size(), opt.max_n + 1UL);
    const auto got = catalog::terms(f.id, k, catalog::Method::formula);
    for (std::size_t n = 0; n < k; ++n) {
      rec.expect_eq(Integer(f.listed_prefix[n]), got[n], family_label(f.id), static_cast<long>(n));
    }
  }
  return rec.result;
}

CheckResult check_method_agreement(const VerifyOptions& opt) {
  Recorder rec("method-agreement");
  const std::size_t k = opt.max_n + 1UL;
  for (const auto& f : catalog::families()) {
    const auto formula = catalog::terms(f.id, k, catalog::Method::formula);
    const auto gf = catalog::terms(f.id, k, catalog::Method::gf);
    const auto riordan = catalog::terms(f.id, k, catalog::Method::riordan);
    const std::size_t brute_k = std::min<std::size_t>(k, brute_check_limit(f.id) + 1UL);
    const auto brute = catalog::terms(f.id, brute_k, catalog::Method::brute);
    for (std::size_t n = 0; n < k; ++n) {
      const long nn = static_cast<long>(n);
      rec.expect_eq(formula[n], gf[n], family_label(f.id) + " gf", nn);
      rec.expect_eq(formula[n], riordan[n], family_label(f.id) + " riordan", nn);
      if (n < brute_k) rec.expect_eq(formula[n], brute[n], family_label(f.id) + " brute", nn);
    }
  }
  return rec.result;
}

CheckResult check_riordan_arrays(const VerifyOptions& opt) {
  Recorder rec("riordan-binomial-arrays");
  const std::size_t order = opt.max_n + 1UL;
  for (auto name : {NamedArray::delannoy, NamedArray::motzkin, NamedArray::uh_insertion, NamedArray::pascal}) {
    const auto triangle = make_named_array(name, order).triangle(order);
    for (std::size_t n = 0; n < order; ++n) {
      for (std::size_t d = 0; d <= n; ++d) {
        const Rational expected(catalog::array_binomial(name, static_cast<long>(n), static_cast<long>(d)));
        rec.expect_eq(expected, triangle[n][d], "array=" + std::string(to_string(name)) + ", d=" + std::to_string(d),
                      static_cast<long>(n));
      }
    }
  }
  return rec.result;
}

CheckResult check_inverse_sqrt(const VerifyOptions& opt) {
  Recorder rec("inverse-sqrt-central-binomial");
  const Series s = div(Series::constant(1, opt.order), opt.sqrt_impl(from_integers({1, -4}, opt.order)));
  for (std::size_t n = 0; n < opt.order; ++n) {
    rec.expect_eq(Rational(catalog::central_binomial(static_cast<unsigned>(n))), s.coeffs()[n],
                  "[x^n] 1/sqrt(1-4x)", static_cast<long>(n));
  }
  return rec.result;
}

CheckResult check_convolution(const VerifyOptions& opt) {
  Recorder rec("central-binomial-convolution");
  std::vector<Rational> c;
  for (std::size_t n = 0; n < opt.order; ++n) c.emplace_back(catalog::central_binomial(static_cast<unsigned>(n)));
  const Series b = Series::make(std::move(c));
  const Series square = mul(b, b);
  Integer four_pow = 1;
  for (std::size_t n = 0; n < opt.order; ++n, four_pow *= 4) {
    rec.expect_eq(Rational(four_pow), square.coeffs()[n], "sum binom(2i,i) binom(2j,j)", static_cast<long>(n));
  }
  return rec.result;
}

CheckResult check_catalan(const VerifyOptions& opt) {
  Recorder rec("catalan-identities");
  for (unsigned n = 0; n <= opt.max_n; ++n) {
    const Integer cb = catalog::central_binomial(n);
    const Integer c = catalog::catalan(n);
    const Rational by_quotient = make_rational(cb, n + 1);
    const Integer by_reflection = cb - binomial(2L * n, static_cast<long>(n) - 1);
    const Rational by_shift = Rational(2 * cb) - make_rational(catalog::central_binomial(n + 1), 2);
    rec.expect_eq(Rational(c), by_quotient, "binom(2n,n)/(n+1)", n);
    rec.expect_eq(c, by_reflection, "binom(2n,n)-binom(2n,n-1)", n);
    rec.expect_eq(Rational(c), by_shift, "2 binom(2n,n) - binom(2n+2,n+1)/2", n);
  }
  return rec.result;
}

CheckResult check_reflection(const VerifyOptions& opt) {
  Recorder rec("reflection-bijection");
  const unsigned limit = std::min(opt.max_n, 7U);
  for (unsigned n = 0; n <= limit; ++n) {
    const auto central = paths::enumerate(catalog::path_family(FamilyId::central, n));
    std::set<paths::Path> image;
    std::size_t dyck = 0;
    for (const auto& p : central) {
      const auto pts = p.points();
      if (std::none_of(pts.begin(), pts.end(), [](const paths::Point& q) { return q.y > 0; })) {
        ++dyck;
        continue;
      }
      const auto q = paths::reflect_first_crossing(p);
      const auto end = q.end();
      if (end.x != static_cast<int>(2 * n) || end.y != 2) {
        rec.fail("reflection of " + paths::render(p) + " ends off (2n, 2)");
      }
      image.insert(q);
    }
    const std::size_t non_dyck = central.size() - dyck;
    rec.expect_eq(non_dyck, image.size(), "injectivity (distinct images)", n);
    rec.expect_eq(binomial(2L * n, static_cast<long>(n) - 1), Integer(image.size()), "image size", n);
    rec.expect_eq(catalog::catalan(n), Integer(dyck), "Dyck count", n);
  }
  return rec.result;
}

CheckResult check_gf_equivalence(const VerifyOptions& opt) {
  Recorder rec("gf-equivalence");
  for (const auto& f : catalog::families()) {
    try {
      (void)catalog::gf(f.id, opt.order);
      ++rec.result.cases;
    } catch (const Error& e) {
      rec.fail(family_label(f.id) + ": " + e.what());
    }
  }
  return rec.result;
}

CheckResult check_enumerated_counts(const VerifyOptions&) {
  Recorder rec("enumerated-counts");
  auto count = [](FamilyId id, unsigned n) { return paths::count(catalog::path_family(id, n)); };
  rec.expect_eq(Integer(13), count(FamilyId::delannoy, 2), "family=delannoy", 2);
  rec.expect_eq(Integer(6), count(FamilyId::schroeder, 2), "family=schroeder", 2);
  rec.expect_eq(Integer(21), count(FamilyId::motzkin, 5), "family=motzkin", 5);
  rec.expect_eq(Integer(51), count(FamilyId::big_motzkin, 5), "family=big_motzkin", 5);
  rec.expect_eq(Integer(30), count(FamilyId::big_motzkin, 5) - count(FamilyId::motzkin, 5),
                "big_motzkin minus motzkin", 5);
  return rec.result;
}

CheckResult check_down_buckets(const VerifyOptions& opt) {
  Recorder rec("down-step-buckets");
  const unsigned limit = std::min(opt.max_n, 7U);
  for (const auto& f : catalog::families()) {
    for (unsigned n = 0; n <= limit; ++n) {
      const auto buckets = paths::count_by_downs(catalog::path_family(f.id, n));
      for (unsigned d = 0; d <= n; ++d) {
        const Integer expected = catalog::array_binomial(f.array, n, d) * catalog::base_term(f.base, d);
        const auto it = buckets.find(d);
        const Integer got = it == buckets.end() ? Integer(0) : it->second;
        rec.expect_eq(expected, got, family_label(f.id) + ", d=" + std::to_string(d), n);
      }
      for (const auto& [d, ways] : buckets) {
        if (d > n) rec.fail(family_label(f.id) + ": path with " + std::to_string(d) + " downs at n=" + std::to_string(n));
      }
    }
  }
  return rec.result;
}

}  // namespace

unsigned brute_check_limit(FamilyId family) noexcept {
  switch (catalog::info(family).flat) {
    case paths::Flat::none: return 8;
    case paths::Flat::horizontal: return 6;
    case paths::Flat::forward: return 12;
  }
  return 0;
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  struct Entry {
    const char* name;
    CheckResult (*run)(const VerifyOptions&);
  };
  constexpr Entry kChecks[] = {
      {"prefix-fidelity", check_prefix_fidelity},
      {"method-agreement", check_method_agreement},
      {"riordan-binomial-arrays", check_riordan_arrays},
      {"inverse-sqrt-central-binomial", check_inverse_sqrt},
      {"central-binomial-convolution", check_convolution},
      {"catalan-identities", check_catalan},
      {"reflection-bijection", check_reflection},
      {"gf-equivalence", check_gf_equivalence},
      {"enumerated-counts", check_enumerated_counts},
      {"down-step-buckets", check_down_buckets},
  };
  std::vector<CheckResult> results;
  for (const auto& check : kChecks) {
    try {
      results.push_back(check.run(options));
    } catch (const std::exception& e) {
      CheckResult failed;
      failed.name = check.name;
      failed.passed = false;
      failed.counterexample = std::string("exception: ") + e.what();
      results.push_back(std::move(failed));
    }
  }
  return results;
}

}  // namespace lattice
