#pragma once

// Exact lattice geometry for Newton polyhedra. Everything here is integer or
// rational arithmetic; there is no floating point anywhere in the library.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/lattice.hpp"

namespace milnor_jump {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

/// Fraction-free Gaussian elimination (Bareiss). Exact for any square
/// integer matrix; the empty matrix has determinant 1.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline IntVector to_int_vector(const LatticePoint& p) {
  return IntVector(p.coords().begin(), p.coords().end());
}

inline Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

/// d! times the Euclidean volume of the simplex on d+1 points in dimension d.
inline Integer simplex_normalized_volume(std::span<const LatticePoint> vertices) {
  if (vertices.empty()) throw InvalidInput("simplex needs at least one vertex");
  const std::size_t d = vertices.front().dimension();
  for (const auto& v : vertices) {
    if (v.dimension() != d) throw InvalidInput("dimension mismatch among simplex vertices");
  }
  if (vertices.size() != d + 1) {
    throw InvalidInput("a simplex in dimension " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                       " vertices");
  }
  IntMatrix edges;
  for (std::size_t i = 1; i <= d; ++i) {
    IntVector row(d);
    for (std::size_t k = 0; k < d; ++k) row[k] = Integer(vertices[i][k]) - vertices[0][k];
    edges.push_back(std::move(row));
  }
  return abs_value(determinant(std::move(edges)));
}

/// Affine hyperplane {x : <normal, x> = offset} with a primitive integer normal.
struct Hyperplane {
  IntVector normal;
  Integer offset;

  Integer evaluate(const IntVector& x) const { return dot(normal, x) - offset; }

  Hyperplane negated() const {
    Hyperplane h{normal, -offset};
    for (auto& c : h.normal) c = -c;
    return h;
  }

  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Hyperplane through m points in dimension m, or nullopt when the points are
/// affinely dependent. The normal is the cofactor vector of the edge matrix,
/// divided by the gcd of its entries.
inline std::optional<Hyperplane> hyperplane_through(std::span<const IntVector> points) {
  const std::size_t m = points.size();
  IntMatrix edges;
  for (std::size_t i = 1; i < m; ++i) {
    IntVector row(m);
    for (std::size_t k = 0; k < m; ++k) row[k] = points[i][k] - points[0][k];
    edges.push_back(std::move(row));
  }
  IntVector normal(m);
  Integer g = 0;
  for (std::size_t j = 0; j < m; ++j) {
    IntMatrix minor;
    for (const auto& row : edges) {
      IntVector r;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != j) r.push_back(row[k]);
      }
      minor.push_back(std::move(r));
    }
    normal[j] = (j % 2 == 0 ? 1 : -1) * determinant(std::move(minor));
    g = gcd(g, normal[j]);
  }
  if (g == 0) return std::nullopt;
  for (auto& c : normal) c /= g;
  Integer offset = dot(normal, points[0]);
  return Hyperplane{std::move(normal), std::move(offset)};
}

namespace detail {

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, const Limits& limits, F&& f) {
  if (k > n) return;
  if (binomial(n, k) > limits.max_enumeration) {
    throw GuardExceeded("subset enumeration C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") exceeds the enumeration guard");
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Volume of conv(points) in dimension m, by coning every facet from the
/// first point (a recursive pulling triangulation). A facet G with primitive
/// normal c contributes |<c,apex> - offset| / (m |c_j|) * vol(proj_j G), where
/// proj_j drops a coordinate with c_j != 0 and is injective on the facet.
inline Rational convex_hull_volume(std::vector<IntVector> points, std::size_t m, const Limits& limits) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (m == 1) {
    if (points.empty()) return 0;
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const IntVector& a, const IntVector& b) { return a[0] < b[0]; });
    return Rational((*hi)[0] - (*lo)[0]);
  }
  if (points.size() < m + 1) return 0;

  const IntVector& apex = points.front();
  std::map<Hyperplane, std::vector<std::size_t>> facets;
  for_each_combination(points.size(), m, limits, [&](std::span<const std::size_t> idx) {
    std::vector<IntVector> chosen;
    for (std::size_t i : idx) chosen.push_back(points[i]);
    auto h = hyperplane_through(chosen);
    if (!h) return;
    bool below = false, above = false;
    for (const auto& q : points) {
      const Integer s = h->evaluate(q);
      if (s < 0) below = true;
      if (s > 0) above = true;
    }
    if (below && above) return;
    if (below) h = h->negated();
    if (facets.contains(*h)) return;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (h->evaluate(points[i]) == 0) on.push_back(i);
    }
    facets.emplace(std::move(*h), std::move(on));
  });

  Rational total = 0;
  for (const auto& [h, on] : facets) {
    const Integer height = abs_value(h.evaluate(apex));
    if (height == 0) continue;
    std::size_t j = 0;
    while (h.normal[j] == 0) ++j;
    std::vector<IntVector> projected;
    for (std::size_t i : on) {
      IntVector q = points[i];
      q.erase(q.begin() + static_cast<std::ptrdiff_t>(j));
      projected.push_back(std::move(q));
    }
    const Rational face = convex_hull_volume(std::move(projected), m - 1, limits);
    total += Rational(height) / Rational(abs_value(h.normal[j]) * m) * face;
  }
  return total;
}

}  // namespace detail

/// A compact (d-1)-dimensional face of the Newton polyhedron.
struct DiagramFacet {
  /// Every support point lying on the facet hyperplane, sorted.
  std::vector<LatticePoint> vertices;
  /// Primitive, strictly positive integer normal.
  IntVector inner_normal;
  Integer offset;

  bool is_simplex() const { return vertices.size() == inner_normal.size(); }
};

/// Compact facets of Gamma_+ = conv(support) + R_+^d: hyperplanes with a
/// strictly positive normal through d affinely independent support points
/// that have the whole support on their non-negative side.
inline std::vector<DiagramFacet> lower_hull_facets(const SupportSet& support, const Limits& limits = {}) {
  if (support.empty()) throw InvalidInput("lower_hull_facets: support must be non-empty");
  const std::size_t d = support.dimension();
  check_dimension_guard(d, limits);
  std::vector<IntVector> pts;
  for (const auto& p : support.points()) pts.push_back(to_int_vector(p));

  std::map<Hyperplane, DiagramFacet> found;
  detail::for_each_combination(pts.size(), d, limits, [&](std::span<const std::size_t> idx) {
    std::vector<IntVector> chosen;
    for (std::size_t i : idx) chosen.push_back(pts[i]);
    auto h = hyperplane_through(chosen);
    if (!h) return;
    if (h->normal[0] < 0) h = h->negated();
    if (!std::all_of(h->normal.begin(), h->normal.end(), [](const Integer& c) { return c > 0; })) return;
    if (found.contains(*h)) return;
    DiagramFacet facet{{}, h->normal, h->offset};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Integer s = h->evaluate(pts[i]);
      if (s < 0) return;
      if (s == 0) facet.vertices.push_back(support.points()[i]);
    }
    found.emplace(std::move(*h), std::move(facet));
  });

  std::vector<DiagramFacet> out;
  for (auto& [h, f] : found) out.push_back(std::move(f));
  return out;
}

namespace detail {

/// Solves the square system a x = b over the rationals; nullopt if singular.
inline std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

}  // namespace detail

/// Exact membership q in conv(support) + R_+^d: is there a convex combination
/// of support points dominated coordinatewise by q? Decided by enumerating
/// the basic solutions of  sum_j w_j s_j + t = q,  sum_j w_j = 1,  w,t >= 0.
inline bool gamma_plus_contains(const SupportSet& support, const LatticePoint& q, const Limits& limits = {}) {
  if (support.empty()) throw InvalidInput("gamma_plus_contains: support must be non-empty");
  const std::size_t d = support.dimension();
  if (q.dimension() != d) throw InvalidInput("gamma_plus_contains: dimension mismatch");
  check_dimension_guard(d, limits);

  const auto& pts = support.points();
  for (const auto& s : pts) {
    bool dominated = true;
    for (std::size_t k = 0; k < d; ++k) dominated = dominated && s[k] <= q[k];
    if (dominated) return true;
  }

  // Columns 0..|S|-1 are support points, |S|..|S|+d-1 are slacks.
  const std::size_t cols = pts.size() + d;
  auto column_entry = [&](std::size_t col, std::size_t row) -> Rational {
    if (col < pts.size()) return row < d ? Rational(pts[col][row]) : Rational(1);
    return (row < d && row == col - pts.size()) ? Rational(1) : Rational(0);
  };
  std::vector<Rational> rhs(d + 1);
  for (std::size_t k = 0; k < d; ++k) rhs[k] = q[k];
  rhs[d] = 1;

  bool feasible = false;
  detail::for_each_combination(cols, d + 1, limits, [&](std::span<const std::size_t> basis) {
    if (feasible || basis.front() >= pts.size()) return;
    std::vector<std::vector<Rational>> a(d + 1, std::vector<Rational>(d + 1));
    for (std::size_t r = 0; r <= d; ++r) {
      for (std::size_t c = 0; c <= d; ++c) a[r][c] = column_entry(basis[c], r);
    }
    auto x = detail::solve_exact(std::move(a), rhs);
    if (x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) feasible = true;
  });
  return feasible;
}

/// Volume of R_+^d minus Gamma_+ for a convenient support: the region is
/// star-shaped from the origin, so it is the union of the cones over the
/// compact facets. Simplex facets use a determinant, others are coned
/// recursively from their first vertex.
inline Rational volume_under_diagram(const SupportSet& support, const Limits& limits = {}) {
  if (support.empty() || !is_convenient(support)) {
    throw InvalidInput("volume_under_diagram: support is not convenient");
  }
  const std::size_t d = support.dimension();
  Rational total = 0;
  for (const auto& facet : lower_hull_facets(support, limits)) {
    if (facet.is_simplex()) {
      std::vector<LatticePoint> simplex{LatticePoint(std::vector<std::int64_t>(d, 0))};
      simplex.insert(simplex.end(), facet.vertices.begin(), facet.vertices.end());
      total += Rational(simplex_normalized_volume(simplex), factorial(static_cast<unsigned>(d)));
    } else {
      std::vector<IntVector> cone{IntVector(d, Integer(0))};
      for (const auto& v : facet.vertices) cone.push_back(to_int_vector(v));
      total += detail::convex_hull_volume(std::move(cone), d, limits);
    }
  }
  return total;
}

}  // namespace milnor_jump
