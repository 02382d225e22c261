#pragma once

// Box-constrained linear diophantine equations
//
//   -i_1 p'_1 - ... - i_{n-1} p'_{n-1} + t p'_n = l,
//   0 < i_k < p_k (k < n),   0 < t < p_n,
//
// where p'_k is the product of all exponents except p_k. A solution with
// t < p_n gives the interior point (i_1, ..., i_{n-1}, p_n - t) whose
// monomial deformation has jump exactly l.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/lattice.hpp"
#include "milnor_jump/singularity.hpp"

namespace milnor_jump {

struct ExtendedGcd {
  Integer g;
  Integer x;
  Integer y;
};

/// g = gcd(a, b) = a x + b y, by the iterative Euclidean algorithm.
inline ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  if (a < 0 || b < 0) throw InvalidInput("extended_gcd: arguments must be non-negative");
  Integer r0 = a, r1 = b;
  Integer x0 = 1, x1 = 0;
  Integer y0 = 0, y1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  return {r0, x0, y0};
}

struct GcdCombination {
  Integer g;
  std::vector<Integer> coefficients;
};

/// g = gcd(values) together with c such that sum c_k v_k = g, folding
/// extended_gcd left to right.
inline GcdCombination multi_gcd_combination(const std::vector<Integer>& values) {
  if (values.empty()) throw InvalidInput("multi_gcd_combination: empty list");
  GcdCombination out{values.front(), {Integer(1)}};
  for (std::size_t k = 1; k < values.size(); ++k) {
    const ExtendedGcd e = extended_gcd(out.g, values[k]);
    for (auto& c : out.coefficients) c *= e.x;
    out.coefficients.push_back(e.y);
    out.g = e.g;
  }
  return out;
}

struct DiophantineSolution {
  /// i_1 .. i_{n-1}, each strictly inside (0, p_k).
  std::vector<std::int64_t> i_low;
  Integer i_tilde;
  /// 0 < i_tilde < p_n
  bool admissible = false;

  friend bool operator==(const DiophantineSolution&, const DiophantineSolution&) = default;
};

/// Left-hand side of the equation for a candidate solution.
inline Integer diophantine_lhs(const BrieskornPham& p, const std::vector<std::int64_t>& i_low,
                               const Integer& i_tilde) {
  const std::size_t n = p.dimension();
  Integer s = i_tilde * p.cofactor(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) s -= Integer(i_low[k]) * p.cofactor(k);
  return s;
}

inline bool pairwise_coprime(const BrieskornPham& p) {
  for (std::size_t a = 0; a < p.dimension(); ++a) {
    for (std::size_t b = a + 1; b < p.dimension(); ++b) {
      if (gcd(Integer(p[a]), Integer(p[b])) != 1) return false;
    }
  }
  return true;
}

/// Euclid route for pairwise coprime exponents. A Bezout combination of the
/// p'_k, scaled by l, is normalised by moving multiples of p_k p'_k = prod p
/// from slot k onto the last slot until every i_k lies in [0, p_k). The result
/// is the only candidate with 0 < i_k < p_k; it is absent when some residue is
/// 0, and inadmissible when i_tilde >= p_n.
inline std::optional<DiophantineSolution> canonical_box_solution(const BrieskornPham& p, const Integer& l) {
  if (l < 1) throw InvalidInput("canonical_box_solution: l must be >= 1");
  if (!pairwise_coprime(p)) throw InvalidInput("canonical_box_solution: exponents (" + p.str() + ") are not pairwise coprime");
  const std::size_t n = p.dimension();

  std::vector<Integer> cofactors;
  for (std::size_t k = 0; k < n; ++k) cofactors.push_back(p.cofactor(k));
  const GcdCombination comb = multi_gcd_combination(cofactors);
  if (comb.g != 1) throw IntegralityViolation("canonical_box_solution: cofactors of coprime exponents not coprime");

  DiophantineSolution sol;
  Integer i_tilde = l * comb.coefficients[n - 1];
  bool boundary = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Integer raw = -l * comb.coefficients[k];
    const Integer residue = floor_mod(raw, Integer(p[k]));
    const Integer shifts = (raw - residue) / p[k];
    i_tilde -= shifts * p[n - 1];
    if (residue == 0) boundary = true;
    sol.i_low.push_back(to_int64(residue));
  }
  if (boundary) return std::nullopt;
  sol.i_tilde = i_tilde;
  sol.admissible = i_tilde > 0 && i_tilde < p[n - 1];
  if (diophantine_lhs(p, sol.i_low, sol.i_tilde) != l) {
    throw IntegralityViolation("canonical_box_solution: normalised identity does not re-substitute");
  }
  return sol;
}

/// General route: enumerate i_k in (0, p_k) for k < n lexicographically and
/// solve for i_tilde. Returns the first admissible solution.
inline std::optional<DiophantineSolution> box_solvable(const BrieskornPham& p, const Integer& l,
                                                       const Limits& limits = {}) {
  if (l < 1) throw InvalidInput("box_solvable: l must be >= 1");
  const std::size_t n = p.dimension();
  Integer box = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) box *= (p[k] - 1);
  if (box > limits.max_enumeration) {
    throw GuardExceeded("box_solvable: search box of size " + box.str() + " exceeds the enumeration guard");
  }

  const Integer last = p.cofactor(n - 1);
  std::vector<std::int64_t> i_low(n - 1, 1);
  while (true) {
    Integer num = l;
    for (std::size_t k = 0; k + 1 < n; ++k) num += Integer(i_low[k]) * p.cofactor(k);
    if (num % last == 0) {
      const Integer t = num / last;
      if (t > 0 && t < p[n - 1]) return DiophantineSolution{i_low, t, true};
    }
    std::size_t k = n - 1;
    while (k > 0) {
      if (++i_low[k - 1] < p[k - 1]) break;
      i_low[k - 1] = 1;
      --k;
    }
    if (k == 0) return std::nullopt;
  }
}

}  // namespace milnor_jump
