#include "cli.hpp"

#include "crossnum/constructions.hpp"
#include "crossnum/bounds_search.hpp"
#include "crossnum/formulas.hpp"
#include "crossnum/spherical.hpp"

#include <functional>
#include <sstream>

namespace crossnum::cli {

namespace {

using formulas::bound_A;

struct Range {
  int full;
  int quick;
  int pick(bool q) const { return q ? quick : full; }
};

CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), true, {}};
  try {
    r.detail = body();
    r.passed = r.detail.rfind("FAIL", 0) != 0;
    if (!r.passed) r.detail.erase(0, 5);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string fail(const std::string& what) { return "FAIL " + what; }

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::ostringstream s;
  s << "(" << a << "," << b << "," << c << ")";
  return s.str();
}

}  // namespace

std::vector<CheckResult> run_verification(bool quick) {
  std::vector<CheckResult> out;

  out.push_back(check("A equals A_3L", [&] {
    const int hi = Range{50, 15}.pick(quick);
    for (int a = 1; a <= hi; ++a)
      for (int b = 1; b <= hi; ++b)
        for (int c = 1; c <= hi; ++c)
          if (bound_A(a, b, c) != formulas::bound_A3L(a, b, c)) return fail("at " + triple(a, b, c));
    return "n_i <= " + std::to_string(hi);
  }));

  out.push_back(check("small-case crossing numbers", [&] {
    const int hi = Range{1000, 100}.pick(quick);
    static constexpr std::pair<int, int> kFamilies[] = {{1, 3}, {2, 3}, {1, 4}, {2, 4}};
    for (const auto& [a, b] : kFamilies)
      for (int n = 1; n <= hi; ++n)
        if (bound_A(a, b, n) != formulas::known_small_cr(a, b, n)) return fail("at " + triple(a, b, n));
    return "n <= " + std::to_string(hi);
  }));

  out.push_back(check("floor identities", [&] {
    const int single = Range{10000, 1000}.pick(quick);
    const int pairs = Range{1000, 200}.pick(quick);
    for (int a = 0; a <= single; ++a)
      if (!formulas::floor_identity_a(a)) return fail("a = " + std::to_string(a));
    for (int a = 0; a <= pairs; ++a)
      for (int b = 0; b <= pairs; ++b)
        if (!formulas::floor_identity_ab(a, b)) return fail("a,b = " + std::to_string(a) + "," + std::to_string(b));
    return "a <= " + std::to_string(single) + ", a,b <= " + std::to_string(pairs);
  }));

  out.push_back(check("zeta values and monotonicity", [&] {
    if (formulas::zeta(2) != Rational(1, 4) || formulas::zeta(3) != Rational(1, 4)) return fail("zeta(2), zeta(3)");
    const int hi = Range{1000, 100}.pick(quick);
    for (int r = 3; r < hi; ++r) {
      if (!(formulas::zeta(r) < formulas::zeta(r + 1))) return fail("not increasing at r = " + std::to_string(r));
      if (!(formulas::zeta(r) < Rational(3, 8))) return fail("zeta >= 3/8 at r = " + std::to_string(r));
    }
    for (int r = 2; r <= 100; ++r)
      if (formulas::s_asymptotic_ratio(r) != formulas::zeta(r)) return fail("s_asym != zeta at r = " + std::to_string(r));
    return "r <= " + std::to_string(hi);
  }));

  out.push_back(check("CRmax special cases", [&] {
    for (int n = 1; n <= 50; ++n) {
      const Integer c = formulas::binomial(n, 2);
      if (formulas::crmax(2, n) != c * c) return fail("crmax(2," + std::to_string(n) + ")");
    }
    for (int r = 2; r <= 50; ++r)
      if (formulas::crmax(r, 1) != formulas::binomial(r, 4)) return fail("crmax(" + std::to_string(r) + ",1)");
    return std::string("r,n <= 50");
  }));

  out.push_back(check("alternating 3-line counts", [&] {
    const int hi = Range{10, 5}.pick(quick);
    for (int a = 1; a <= hi; ++a)
      for (int b = 1; b <= hi; ++b)
        for (int c = 1; c <= hi; ++c) {
          const auto total = geom::count_crossings(constructions::alternating_3line(a, b, c)).total;
          if (Integer(static_cast<long>(total)) != bound_A(a, b, c)) return fail("at " + triple(a, b, c));
        }
    const auto k555 = geom::count_crossings(constructions::alternating_3line(5, 5, 5)).total;
    if (k555 != 192) return fail("K_{5,5,5} gives " + std::to_string(k555));
    return "count == A for n_i <= " + std::to_string(hi) + "; K_{5,5,5} = 192";
  }));

  out.push_back(check("convex and 2-line counts", [&] {
    for (int r = 2; r <= 5; ++r)
      for (int n = 1; n <= 4; ++n) {
        if (r * n < 3) continue;
        const auto total = geom::count_crossings(constructions::convex_max(r, n)).total;
        if (Integer(static_cast<long>(total)) != formulas::crmax(r, n)) return fail("convex at r,n = " + std::to_string(r) + "," + std::to_string(n));
      }
    const int hi = Range{15, 8}.pick(quick);
    for (int n = 1; n <= hi; ++n)
      for (int m = 1; m <= hi; ++m) {
        const auto total = geom::count_crossings(constructions::two_line(n, m)).total;
        if (Integer(static_cast<long>(total)) != formulas::zarankiewicz_Z(n, m)) return fail("2-line at " + std::to_string(n) + "," + std::to_string(m));
      }
    return "convex r<=5,n<=4; 2-line n,m <= " + std::to_string(hi);
  }));

  out.push_back(check("spherical ratio limit", [&] {
    for (int r = 2; r <= 10; ++r) {
      const Rational gap = abs(sphere::ratio_to_max(r, 1000) - formulas::zeta(r));
      if (!(gap < Rational(1, 1000))) return fail("r = " + std::to_string(r) + " gap " + gap.to_decimal(6));
    }
    return std::string("|ratio(r,1000) - zeta(r)| < 1e-3 for r <= 10");
  }));

  out.push_back(check("counting bound ratio", [&] {
    const std::int64_t n = quick ? 1000 : 10000;
    const auto b = search::counting_bound(n);
    const Rational gap = abs(b.ratio_to_A - Rational(2, 3));
    if (!(gap < Rational(1, 100))) return fail("gap " + gap.to_decimal(6));
    return "ratio(" + std::to_string(n) + ") = " + b.ratio_to_A.to_decimal(6);
  }));

  out.push_back(check("flag extrapolation", [&] {
    const Rational v = search::flag_extrapolation(Rational::parse("5.6767"));
    if (!(v > Rational::parse("0.973"))) return fail("6*5.6767/35 = " + v.to_decimal(6));
    return "6*5.6767/35 = " + v.to_decimal(6);
  }));

  return out;
}

}  // namespace crossnum::cli
