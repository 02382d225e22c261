#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/geometry.hpp"
#include "milnor_jump/lattice.hpp"

namespace milnor_jump {

/// Points of `support` whose coordinates vanish off `axes` (0-based, any
/// order), re-indexed into dimension |axes| in the order given.
inline SupportSet restrict_to_subspace(const SupportSet& support, const std::vector<std::size_t>& axes) {
  if (axes.empty()) throw InvalidInput("restrict_to_subspace: axis set must be non-empty");
  for (std::size_t a : axes) {
    if (a >= support.dimension()) throw InvalidInput("restrict_to_subspace: axis out of range");
  }
  SupportSet out(axes.size());
  for (const auto& q : support.points()) {
    bool inside = true;
    for (std::size_t k = 0; k < q.dimension() && inside; ++k) {
      if (q[k] != 0 && std::find(axes.begin(), axes.end(), k) == axes.end()) inside = false;
    }
    if (!inside) continue;
    std::vector<std::int64_t> c;
    for (std::size_t a : axes) c.push_back(q[a]);
    out.insert(LatticePoint(std::move(c)));
  }
  return out;
}

/// Kouchnirenko's Newton number
///   nu = sum over I subset of {1..n} of (-1)^(n-|I|) |I|! V_I,
/// where V_I is the volume under the diagram restricted to the coordinate
/// subspace spanned by I and V_{} = 1.
inline Integer newton_number(const SupportSet& support, const Limits& limits = {}) {
  if (support.empty() || !is_convenient(support)) {
    throw InvalidInput("newton_number: support is not convenient");
  }
  const std::size_t n = support.dimension();
  check_dimension_guard(n, limits);

  Rational sum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> axes;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::uint64_t{1} << k)) axes.push_back(k);
    }
    Rational term = 1;
    if (!axes.empty()) {
      term = Rational(factorial(static_cast<unsigned>(axes.size()))) *
             volume_under_diagram(restrict_to_subspace(support, axes), limits);
    }
    if ((n - axes.size()) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (!is_integral(sum) || sum < 0) {
    throw IntegralityViolation("newton_number: inclusion-exclusion sum is not a non-negative integer");
  }
  return numerator_of(sum);
}

}  // namespace milnor_jump
