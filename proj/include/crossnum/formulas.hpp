#pragma once

// Closed-form crossing quantities, evaluated exactly.

#include "crossnum/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossnum::formulas {

class UnknownFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floor division that rounds toward negative infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// C(n, k); zero when n < k or n < 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// floor(n/2) floor((n-1)/2): the per-part factor shared by Z, A and H.
Integer half_product(std::int64_t n);

/// Zarankiewicz number floor(n/2)floor((n-1)/2)floor(m/2)floor((m-1)/2).
Integer zarankiewicz_Z(std::int64_t n, std::int64_t m);

/// Hill number (1/4)floor(n/2)floor((n-1)/2)floor((n-2)/2)floor((n-3)/2).
Integer hill_H(std::int64_t n);

/// Conjectured rectilinear crossing number of K_{n1,n2,n3}: for each part i
/// with complement {j,k}, Z(nj,nk) + half_product(ni) * floor(nj*nk/2).
Integer bound_A(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// Crossings of the alternating 3-line drawing split into its two cases.
struct ThreeLineTerms {
  Integer two_two;      // both same-part pairs on non-opposite rays
  Integer two_one_one;  // one same-part pair, the other two points in one half-plane
  Integer total() const { return two_two + two_one_one; }
};

ThreeLineTerms bound_A3L_terms(std::int64_t n1, std::int64_t n2, std::int64_t n3);
Integer bound_A3L(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// Maximum crossing number of the balanced complete r-partite graph with
/// parts of size n: C(r,2)C(n,2)^2 + r C(r-1,2) C(n,2) n^2 + C(r,4) n^4.
Integer crmax(std::int64_t r, std::int64_t n);

/// 3(r^2-r) / (8(r^2+r-3)).
Rational zeta(std::int64_t r);

/// Asymptotic probabilities that four random vertices of the balanced
/// r-partite graph span 0 (alpha), 2 (beta) or 3 (gamma) disjoint edge pairs.
struct TypeProbabilities {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

TypeProbabilities type_probabilities(std::int64_t r);

/// (1/8)(2 + gamma - 2 alpha) / (1 - alpha); equals zeta(r).
Rational s_asymptotic_ratio(std::int64_t r);

/// Published crossing numbers of K_{a,b,n} for (a,b) in
/// {(1,3),(2,3),(1,4),(2,4)}. Throws UnknownFamily otherwise.
Integer known_small_cr(int a, int b, std::int64_t n);

/// C(ceil(a/2),2) + C(floor(a/2),2) == floor(a/2) floor((a-1)/2).
bool floor_identity_a(std::int64_t a);

/// floor(a/2)ceil(b/2) + ceil(a/2)floor(b/2) == floor(ab/2).
bool floor_identity_ab(std::int64_t a, std::int64_t b);

struct BoundTable {
  std::vector<std::int64_t> profile;
  std::vector<std::pair<std::string, Rational>> entries;

  const Rational* find(const std::string& name) const;
};

/// Every closed form that applies to the given part sizes:
///   one part          H (and CRmax of K_n)
///   two parts         Z
///   three parts       A, A_3L, and the published cr value for small families
///   balanced, r >= 2  CRmax, zeta, alpha, beta, gamma, s_asym
BoundTable bound_table(const std::vector<std::int64_t>& profile);

}  // namespace crossnum::formulas
