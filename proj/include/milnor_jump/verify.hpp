#pragma once

// Self-verification suites: every invariant that ties the fast algorithm to
// the brute-force Newton-number oracle, run over a box of exponent tuples.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "milnor_jump/deformation_jump.hpp"
#include "milnor_jump/diophantine.hpp"
#include "milnor_jump/jump_algorithm.hpp"
#include "milnor_jump/newton_number.hpp"
#include "milnor_jump/singularity.hpp"

namespace milnor_jump {

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  ///< first few diagnostics only

  bool ok() const { return failed == 0; }

  void record(bool ok, const std::function<std::string()>& what) {
    if (ok) {
      ++passed;
      return;
    }
    ++failed;
    if (failures.size() < 5) failures.push_back(what());
  }
};

/// All exponent tuples with 1 <= n <= n_max variables and 2 <= p_k <= p_max,
/// in lexicographic order per dimension.
inline std::vector<BrieskornPham> exponent_box(std::size_t n_min, std::size_t n_max, std::int64_t p_max) {
  std::vector<BrieskornPham> out;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    std::vector<std::int64_t> e(n, 2);
    while (true) {
      out.emplace_back(e);
      std::size_t k = n;
      while (k > 0) {
        if (++e[k - 1] <= p_max) break;
        e[k - 1] = 2;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

/// Every elimination order for the boundary recursion agrees.
inline bool boundary_order_invariant(const MonomialDeformation& d, const Integer& expected) {
  std::vector<std::size_t> order(d.base().dimension());
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    if (jump_boundary(d, order) != expected) return false;
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

inline std::vector<SuiteResult> run_verification(std::size_t n_max, std::int64_t p_max, const Limits& limits = {}) {
  SuiteResult kouchnirenko{"kouchnirenko_consistency", 0, 0, {}};
  SuiteResult monomial{"monomial_jump_routes", 0, 0, {}};
  SuiteResult monotone{"strict_monotonicity", 0, 0, {}};
  SuiteResult oracle{"fast_vs_oracle", 0, 0, {}};
  SuiteResult realizer{"realizer_validity", 0, 0, {}};
  SuiteResult perm{"permutation_invariance", 0, 0, {}};
  SuiteResult closed{"two_variable_closed_form", 0, 0, {}};
  SuiteResult dioph{"diophantine_agreement", 0, 0, {}};

  for (const BrieskornPham& p : exponent_box(1, n_max, p_max)) {
    const std::string tag = "(" + p.str() + ")";
    const SupportSet base = bp_support(p);
    const Integer nu0 = newton_number(base, limits);
    kouchnirenko.record(nu0 == milnor_number(p), [&] { return tag + ": nu = " + nu0.str(); });

    for (const MonomialIndex& i : under_diagram_points(p, limits)) {
      const MonomialDeformation d(p, i);
      const Integer nu1 = newton_number(base.with(i.point()), limits);
      monotone.record(nu1 < nu0, [&] { return tag + " + " + i.str() + ": nu does not drop"; });
      const Integer ref = nu0 - nu1;
      bool ok = jump_monomial(d) == ref;
      if (!is_interior(i)) ok = ok && boundary_order_invariant(d, ref);
      monomial.record(ok, [&] { return tag + " " + i.str() + ": routes disagree with oracle " + ref.str(); });
    }

    const JumpReport report = lambda_nd(p, {limits, true});
    const OracleResult brute = lambda_nd_oracle(p, limits);
    oracle.record(report.lambda_nd == brute.value,
                  [&] { return tag + ": fast " + report.lambda_nd.str() + " vs oracle " + brute.value.str(); });
    const bool valid = lies_under_diagram(p, report.realizer.point()) &&
                       jump_oracle(MonomialDeformation(p, report.realizer), limits) == report.lambda_nd &&
                       report.lambda_nd <= milnor_number(p) &&
                       (!report.lambda_hyp || report.lambda_nd <= *report.lambda_hyp);
    realizer.record(valid, [&] { return tag + ": realizer " + report.realizer.str() + " invalid"; });

    if (std::is_sorted(p.exponents().begin(), p.exponents().end())) {
      std::vector<std::int64_t> e = p.exponent_vector();
      bool same = true;
      while (std::next_permutation(e.begin(), e.end())) {
        same = same && lambda_nd(BrieskornPham(e), {limits, true}).lambda_nd == report.lambda_nd;
      }
      perm.record(same, [&] { return tag + ": permutation changes lambda_nd"; });
    }

    if (p.dimension() == 2) {
      closed.record(report.lambda_nd == two_variable_closed_form(p[0], p[1]),
                    [&] { return tag + ": closed form mismatch"; });
    }

    if (p.dimension() >= 2 && pairwise_coprime(p) && report.lambda_hyp) {
      for (Integer l = 1; l <= *report.lambda_hyp; ++l) {
        const auto canon = canonical_box_solution(p, l);
        const auto general = box_solvable(p, l, limits);
        const bool canon_ok = canon && canon->admissible;
        const bool agree = canon_ok == general.has_value() && (!canon_ok || *canon == *general);
        dioph.record(agree, [&] { return tag + " l=" + l.str() + ": Euclid and enumeration disagree"; });
      }
    }
  }
  return {kouchnirenko, monomial, monotone, oracle, realizer, perm, closed, dioph};
}

}  // namespace milnor_jump
