#include "crossnum/formulas.hpp"

#include <algorithm>
#include <optional>

namespace crossnum::formulas {

namespace {

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer half_product(std::int64_t n) { return big(floor_div(n, 2)) * big(floor_div(n - 1, 2)); }

Integer zarankiewicz_Z(std::int64_t n, std::int64_t m) {
  require(n >= 0 && m >= 0, "Z(n,m) needs n,m >= 0");
  return half_product(n) * half_product(m);
}

Integer hill_H(std::int64_t n) {
  require(n >= 0, "H(n) needs n >= 0");
  const Integer p = half_product(n) * half_product(n - 2);
  return p / 4;
}

Integer bound_A(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  require(n1 >= 0 && n2 >= 0 && n3 >= 0, "A needs nonnegative part sizes");
  const std::int64_t n[3] = {n1, n2, n3};
  Integer total = 0;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t nj = n[(i + 1) % 3];
    const std::int64_t nk = n[(i + 2) % 3];
    total += zarankiewicz_Z(nj, nk);
    total += half_product(n[i]) * (big(nj) * big(nk) / 2);
  }
  return total;
}

ThreeLineTerms bound_A3L_terms(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  require(n1 >= 0 && n2 >= 0 && n3 >= 0, "A_3L needs nonnegative part sizes");
  const std::int64_t n[3] = {n1, n2, n3};
  ThreeLineTerms terms;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t nj = n[(i + 1) % 3];
    const std::int64_t nk = n[(i + 2) % 3];
    const std::int64_t aj = ceil_div(nj, 2), bj = floor_div(nj, 2);
    const std::int64_t ak = ceil_div(nk, 2), bk = floor_div(nk, 2);
    const std::int64_t ai = ceil_div(n[i], 2), bi = floor_div(n[i], 2);
    terms.two_two += binomial(aj, 2) * binomial(ak, 2) + binomial(aj, 2) * binomial(bk, 2) +
                     binomial(bj, 2) * binomial(ak, 2) + binomial(bj, 2) * binomial(bk, 2);
    terms.two_one_one += (binomial(ai, 2) + binomial(bi, 2)) * (big(bj) * big(ak) + big(aj) * big(bk));
  }
  return terms;
}

Integer bound_A3L(std::int64_t n1, std::int64_t n2, std::int64_t n3) { return bound_A3L_terms(n1, n2, n3).total(); }

Integer crmax(std::int64_t r, std::int64_t n) {
  require(r >= 2 && n >= 1, "CRmax needs r >= 2 and n >= 1");
  const Integer cn2 = binomial(n, 2);
  const Integer nn = big(n) * big(n);
  return binomial(r, 2) * cn2 * cn2 + big(r) * binomial(r - 1, 2) * cn2 * nn + binomial(r, 4) * nn * nn;
}

Rational zeta(std::int64_t r) {
  require(r >= 2, "zeta(r) needs r >= 2");
  const Integer rr = big(r);
  return Rational(3 * (rr * rr - rr), 8 * (rr * rr + rr - 3));
}

TypeProbabilities type_probabilities(std::int64_t r) {
  require(r >= 2, "type probabilities need r >= 2");
  const Integer rr = big(r);
  const Integer cube = rr * rr * rr;
  TypeProbabilities p;
  p.alpha = Rational(4 * rr - 3, cube);
  p.gamma = Rational((rr - 1) * (rr - 2) * (rr - 3), cube);
  p.beta = Rational(1) - p.alpha - p.gamma;
  return p;
}

Rational s_asymptotic_ratio(std::int64_t r) {
  const auto p = type_probabilities(r);
  return Rational(1, 8) * (Rational(2) + p.gamma - Rational(2) * p.alpha) / (Rational(1) - p.alpha);
}

Integer known_small_cr(int a, int b, std::int64_t n) {
  require(n >= 1, "known_small_cr needs n >= 1");
  const Integer hp = half_product(n);
  const Integer nb = big(n);
  if (a == 1 && b == 3) return 2 * hp + big(floor_div(n, 2));
  if (a == 2 && b == 3) return 4 * hp + nb;
  if (a == 1 && b == 4) return nb * (nb - 1);
  if (a == 2 && b == 4) return 6 * hp + 2 * nb;
  throw UnknownFamily("no published closed form for K_{" + std::to_string(a) + "," + std::to_string(b) + ",n}");
}

bool floor_identity_a(std::int64_t a) {
  if (a < 0) throw std::invalid_argument("floor identity needs a >= 0");
  const __int128 hi = ceil_div(a, 2), lo = floor_div(a, 2);
  const __int128 lhs = hi * (hi - 1) / 2 + lo * (lo - 1) / 2;
  return lhs == __int128{floor_div(a, 2)} * floor_div(a - 1, 2);
}

bool floor_identity_ab(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw std::invalid_argument("floor identity needs a, b >= 0");
  const __int128 lhs = __int128{floor_div(a, 2)} * ceil_div(b, 2) + __int128{ceil_div(a, 2)} * floor_div(b, 2);
  return lhs == __int128{a} * b / 2;
}

const Rational* BoundTable::find(const std::string& name) const {
  for (const auto& [k, v] : entries) {
    if (k == name) return &v;
  }
  return nullptr;
}

BoundTable bound_table(const std::vector<std::int64_t>& profile) {
  require(!profile.empty(), "empty profile");
  for (auto v : profile) require(v >= 1, "part sizes must be positive");

  BoundTable t;
  t.profile = profile;
  auto add = [&](std::string name, Rational v) { t.entries.emplace_back(std::move(name), std::move(v)); };

  if (profile.size() == 1) {
    add("H", hill_H(profile[0]));
    if (profile[0] >= 2) add("CRmax", crmax(profile[0], 1));
  }
  if (profile.size() == 2) add("Z", zarankiewicz_Z(profile[0], profile[1]));
  if (profile.size() == 3) {
    add("A", bound_A(profile[0], profile[1], profile[2]));
    add("A_3L", bound_A3L(profile[0], profile[1], profile[2]));
    // Published values are for K_{a,b,n}; match any ordering.
    auto known = [&]() -> std::optional<Integer> {
      static constexpr std::pair<int, int> kFamilies[] = {{1, 3}, {2, 3}, {1, 4}, {2, 4}};
      for (const auto& [a, b] : kFamilies) {
        for (std::size_t free_index = 0; free_index < 3; ++free_index) {
          std::vector<std::int64_t> rest;
          for (std::size_t i = 0; i < 3; ++i) {
            if (i != free_index) rest.push_back(profile[i]);
          }
          std::sort(rest.begin(), rest.end());
          if (rest[0] == a && rest[1] == b) return known_small_cr(a, b, profile[free_index]);
        }
      }
      return std::nullopt;
    }();
    if (known) add("cr_known", *known);
  }
  const bool balanced = std::all_of(profile.begin(), profile.end(), [&](auto v) { return v == profile[0]; });
  if (balanced && profile.size() >= 2) {
    const auto r = static_cast<std::int64_t>(profile.size());
    add("CRmax", crmax(r, profile[0]));
    add("zeta", zeta(r));
    const auto p = type_probabilities(r);
    add("alpha", p.alpha);
    add("beta", p.beta);
    add("gamma", p.gamma);
    add("s_asym", s_asymptotic_ratio(r));
  }
  return t;
}

}  // namespace crossnum::formulas
