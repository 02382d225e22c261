#pragma once

// Jump of the Milnor number along a monomial deformation f0 + s z^i of a
// Brieskorn-Pham singularity, computed three independent ways.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/lattice.hpp"
#include "milnor_jump/newton_number.hpp"
#include "milnor_jump/singularity.hpp"

namespace milnor_jump {

/// f0 + s z^i with i strictly under the Newton diagram of f0.
class MonomialDeformation {
 public:
  MonomialDeformation(BrieskornPham base, MonomialIndex index) : base_(std::move(base)), index_(std::move(index)) {
    if (index_.dimension() != base_.dimension()) {
      throw InvalidInput("monomial " + index_.str() + " has the wrong number of variables for exponents (" +
                         base_.str() + ")");
    }
    if (!lies_under_diagram(base_, index_.point())) {
      throw InvalidInput("monomial " + index_.str() + " is not strictly under the Newton diagram of (" +
                         base_.str() + ")");
    }
  }

  const BrieskornPham& base() const { return base_; }
  const MonomialIndex& index() const { return index_; }

 private:
  BrieskornPham base_;
  MonomialIndex index_;
};

/// Newton-number difference nu(f0) - nu(f0 + s z^i). This is the reference
/// route: it goes through the full facet/volume machinery.
inline Integer jump_oracle(const MonomialDeformation& d, const Limits& limits = {}) {
  const SupportSet base = bp_support(d.base());
  const Integer jump = newton_number(base, limits) - newton_number(base.with(d.index().point()), limits);
  if (jump <= 0) {
    throw IntegralityViolation("jump_oracle: non-positive jump " + jump.str() + " for " + d.index().str());
  }
  return jump;
}

/// n! vol(simplex(i, P1..Pn)) = prod p - sum_k i_k p'_k, valid for interior i.
inline Integer jump_interior(const MonomialDeformation& d) {
  if (!is_interior(d.index())) {
    throw InvalidInput("jump_interior: monomial " + d.index().str() + " has a zero coordinate");
  }
  return d.base().product() - scaled_diagram_level(d.base(), d.index().point());
}

namespace detail {

inline Integer jump_boundary_rec(BrieskornPham p, LatticePoint i, std::vector<std::size_t> axis_ids,
                                 std::span<const std::size_t> order) {
  Integer factor = 1;
  while (true) {
    if (std::all_of(i.coords().begin(), i.coords().end(), [](std::int64_t c) { return c > 0; })) {
      // Covers the one-variable base p - i as well.
      return factor * (p.product() - scaled_diagram_level(p, i));
    }
    std::size_t k = axis_ids.size();
    for (std::size_t want : order) {
      auto it = std::find(axis_ids.begin(), axis_ids.end(), want);
      if (it == axis_ids.end()) continue;
      const auto pos = static_cast<std::size_t>(it - axis_ids.begin());
      if (i[pos] == 0) {
        k = pos;
        break;
      }
    }
    if (k == axis_ids.size()) throw InvalidInput("jump_boundary: elimination order misses a zero axis");
    factor *= (p[k] - 1);
    p = truncate(p, k);
    i = i.without_axis(k);
    axis_ids.erase(axis_ids.begin() + static_cast<std::ptrdiff_t>(k));
  }
}

}  // namespace detail

/// Hyperplane recursion: for i_k = 0 the jump equals (p_k - 1) times the
/// jump of the truncated deformation. Zero axes are eliminated in the order
/// given by `order` (a permutation of 0..n-1; the first listed axis that is
/// still present and zero goes next). One-variable input is the base case
/// p - i.
inline Integer jump_boundary(const MonomialDeformation& d, std::span<const std::size_t> order) {
  const std::size_t n = d.base().dimension();
  if (n > 1 && is_interior(d.index())) {
    throw InvalidInput("jump_boundary: monomial " + d.index().str() + " has no zero coordinate");
  }
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return detail::jump_boundary_rec(d.base(), d.index().point(), std::move(ids), order);
}

/// Ascending elimination order.
inline Integer jump_boundary(const MonomialDeformation& d) {
  std::vector<std::size_t> order(d.base().dimension());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return jump_boundary(d, order);
}

inline Integer jump_monomial(const MonomialDeformation& d) {
  return is_interior(d.index()) ? jump_interior(d) : jump_boundary(d);
}

}  // namespace milnor_jump
