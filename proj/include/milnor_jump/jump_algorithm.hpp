#pragma once

// Non-degenerate jump of the Milnor number of a Brieskorn-Pham singularity.
//
// Induction on the number of variables. For n = 1 the jump is 1, realised by
// z^(p-1). For n >= 2:
//   A. every coordinate hyperplane {x_k = 0} contributes lambda_k (p_k - 1),
//      where lambda_k is the jump of the truncation dropping z_k; the
//      minimum is lambda_hyp;
//   B. an interior point i has jump prod p - sum i_k p'_k, so the smallest l
//      below lambda_hyp for which the box-constrained diophantine equation is
//      solvable wins; if there is none the answer is lambda_hyp.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/deformation_jump.hpp"
#include "milnor_jump/diophantine.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/lattice.hpp"
#include "milnor_jump/singularity.hpp"

namespace milnor_jump {

enum class JumpSource { interior, hyperplane };

inline const char* to_string(JumpSource s) { return s == JumpSource::interior ? "interior" : "hyperplane"; }

struct HyperplaneJump {
  std::size_t axis;       ///< 0-based axis k of the hyperplane {x_k = 0}
  Integer sub_jump;       ///< lambda_k
  Integer lifted_jump;    ///< lambda_k (p_k - 1)
};

struct InteriorStep {
  Integer l;
  std::optional<DiophantineSolution> solution;
  bool admissible = false;
};

struct LambdaHyp {
  Integer value;
  std::size_t k0;
  MonomialIndex realizer_embedded;
  std::vector<HyperplaneJump> per_axis;
};

struct JumpReport {
  BrieskornPham base;
  Integer lambda_nd;
  MonomialIndex realizer;
  std::optional<Integer> lambda_hyp;  ///< absent for one variable
  std::optional<std::size_t> k0;
  std::vector<HyperplaneJump> hyperplane_jumps;
  std::vector<InteriorStep> interior_trace;
  JumpSource source = JumpSource::interior;
  bool euclid_path = false;  ///< interior search used the coprime Euclid route
};

struct JumpOptions {
  Limits limits{};
  /// Use the Euclid route whenever the exponents are pairwise coprime.
  bool prefer_euclid = true;
};

namespace detail {

class JumpSolver {
 public:
  explicit JumpSolver(JumpOptions options) : options_(options) {}

  const JumpReport& solve(const BrieskornPham& p) {
    if (auto it = memo_.find(p.exponent_vector()); it != memo_.end()) return it->second;
    JumpReport report = compute(p);
    return memo_.emplace(p.exponent_vector(), std::move(report)).first->second;
  }

  LambdaHyp hyperplane_minimum(const BrieskornPham& p) {
    if (p.dimension() < 2) throw InvalidInput("lambda_hyp: needs at least two variables");
    std::optional<LambdaHyp> best;
    std::vector<HyperplaneJump> per_axis;
    for (std::size_t k = 0; k < p.dimension(); ++k) {
      const JumpReport& sub = solve(truncate(p, k));
      const Integer lifted = sub.lambda_nd * (p[k] - 1);
      per_axis.push_back({k, sub.lambda_nd, lifted});
      if (!best || lifted < best->value) {
        best = LambdaHyp{lifted, k, MonomialIndex(sub.realizer.point().with_axis_inserted(k, 0)), {}};
      }
    }
    best->per_axis = std::move(per_axis);
    return *best;
  }

 private:
  JumpReport compute(const BrieskornPham& p) {
    const std::size_t n = p.dimension();
    if (n == 1) {
      return JumpReport{p, 1, MonomialIndex{p[0] - 1}, std::nullopt, std::nullopt, {}, {}, JumpSource::interior,
                        false};
    }
    LambdaHyp hyp = hyperplane_minimum(p);
    JumpReport report{p,        hyp.value,  hyp.realizer_embedded, hyp.value, hyp.k0, std::move(hyp.per_axis),
                      {},       JumpSource::hyperplane,            false};
    report.euclid_path = options_.prefer_euclid && pairwise_coprime(p);

    for (Integer l = 1; l < hyp.value; ++l) {
      const std::optional<DiophantineSolution> sol =
          report.euclid_path ? canonical_box_solution(p, l) : box_solvable(p, l, options_.limits);
      const bool admissible = sol && sol->admissible;
      report.interior_trace.push_back({l, sol, admissible});
      if (admissible) {
        std::vector<std::int64_t> c = sol->i_low;
        c.push_back(to_int64(Integer(p[n - 1]) - sol->i_tilde));
        report.lambda_nd = l;
        report.realizer = MonomialIndex(LatticePoint(std::move(c)));
        report.source = JumpSource::interior;
        break;
      }
    }

    if (jump_monomial(MonomialDeformation(p, report.realizer)) != report.lambda_nd) {
      throw IntegralityViolation("lambda_nd: realizer " + report.realizer.str() + " does not attain " +
                                 report.lambda_nd.str() + " for (" + p.str() + ")");
    }
    return report;
  }

  JumpOptions options_;
  std::map<std::vector<std::int64_t>, JumpReport> memo_;
};

}  // namespace detail

/// min over k of lambda_nd(truncate(p, k)) (p_k - 1); ties go to the smallest k.
inline LambdaHyp lambda_hyp(const BrieskornPham& p, const JumpOptions& options = {}) {
  detail::JumpSolver solver(options);
  return solver.hyperplane_minimum(p);
}

inline JumpReport lambda_nd(const BrieskornPham& p, const JumpOptions& options = {}) {
  detail::JumpSolver solver(options);
  return solver.solve(p);
}

struct OracleResult {
  Integer value;
  MonomialIndex realizer;
};

/// Brute force: the minimum of the Newton-number jump over every i in J,
/// lexicographically smallest minimiser.
inline OracleResult lambda_nd_oracle(const BrieskornPham& p, const Limits& limits = {}) {
  check_dimension_guard(p.dimension(), limits);
  if (p.product() > limits.max_oracle_points) {
    throw GuardExceeded("lambda_nd_oracle: |J| bound " + p.product().str() + " exceeds the oracle guard of " +
                        std::to_string(limits.max_oracle_points));
  }
  const SupportSet base = bp_support(p);
  const Integer nu0 = newton_number(base, limits);
  std::optional<OracleResult> best;
  for (const MonomialIndex& i : under_diagram_points(p, limits)) {
    const Integer jump = nu0 - newton_number(base.with(i.point()), limits);
    if (jump <= 0) throw IntegralityViolation("lambda_nd_oracle: non-positive jump at " + i.str());
    if (!best || jump < best->value) best = OracleResult{jump, i};
  }
  if (!best) throw IntegralityViolation("lambda_nd_oracle: J is empty");
  return *best;
}

/// Two-variable closed form with d = gcd(p1, p2): d if d < min(p1, p2), else d - 1.
inline Integer two_variable_closed_form(std::int64_t p1, std::int64_t p2) {
  if (p1 < 2 || p2 < 2) throw InvalidInput("two_variable_closed_form: exponents must be >= 2");
  const Integer d = gcd(Integer(p1), Integer(p2));
  return d < std::min(p1, p2) ? d : Integer(d - 1);
}

}  // namespace milnor_jump
