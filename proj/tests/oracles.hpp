#pragma once

// Independent reference computations for the tests. Nothing in here calls
// into the facet enumeration, the recursion or the diophantine solver.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Pt2 = std::pair<std::int64_t, std::int64_t>;

/// Twice the signed area of a simple polygon.
inline Int shoelace2(const std::vector<Pt2>& poly) {
  Int s = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    const auto& a = poly[k];
    const auto& b = poly[(k + 1) % poly.size()];
    s += Int(a.first) * b.second - Int(b.first) * a.second;
  }
  return s < 0 ? Int(-s) : s;
}

inline Int det3(const std::vector<std::vector<std::int64_t>>& m) {
  return Int(m[0][0]) * (Int(m[1][1]) * m[2][2] - Int(m[1][2]) * m[2][1]) -
         Int(m[0][1]) * (Int(m[1][0]) * m[2][2] - Int(m[1][2]) * m[2][0]) +
         Int(m[0][2]) * (Int(m[1][0]) * m[2][1] - Int(m[1][1]) * m[2][0]);
}

inline Int cross(const Pt2& o, const Pt2& a, const Pt2& b) {
  return Int(a.first - o.first) * (b.second - o.second) - Int(a.second - o.second) * (b.first - o.first);
}

/// Twice the area under the Newton boundary of a convenient planar support:
/// monotone-chain lower hull from the y-axis point to the x-axis point,
/// closed through the origin.
inline Int area_under_diagram2(std::vector<Pt2> pts) {
  std::int64_t a = INT64_MAX, b = INT64_MAX;
  for (const auto& p : pts) {
    if (p.second == 0 && p.first > 0) a = std::min(a, p.first);
    if (p.first == 0 && p.second > 0) b = std::min(b, p.second);
  }
  std::vector<Pt2> kept;
  for (const auto& p : pts) {
    if (p.first <= a && p.second <= b && (p.first < a || p.second == 0)) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<Pt2> hull;
  for (const auto& p : kept) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // hull runs from (0, y_min at x=0) to (a, 0); drop anything before (0, b).
  std::vector<Pt2> poly{{0, 0}};
  for (const auto& p : hull) {
    if (p.first == 0 && p.second != b) continue;
    poly.push_back(p);
  }
  std::reverse(poly.begin() + 1, poly.end());
  return shoelace2(poly);
}

/// Planar Newton number 2V - a - b + 1 from the shoelace area.
inline Int newton_number2(const std::vector<Pt2>& pts) {
  std::int64_t a = INT64_MAX, b = INT64_MAX;
  for (const auto& p : pts) {
    if (p.second == 0 && p.first > 0) a = std::min(a, p.first);
    if (p.first == 0 && p.second > 0) b = std::min(b, p.second);
  }
  return area_under_diagram2(pts) - a - b + 1;
}

/// J by rational comparison of sum i_k / p_k with 1, over the full box.
inline std::vector<std::vector<std::int64_t>> points_under(const std::vector<std::int64_t>& p) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> i(p.size(), 0);
  const std::int64_t top = *std::max_element(p.begin(), p.end());
  while (true) {
    std::size_t k = p.size();
    while (k > 0) {
      if (++i[k - 1] <= top) break;
      i[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    Rat s = 0;
    for (std::size_t j = 0; j < p.size(); ++j) s += Rat(i[j], p[j]);
    if (s < 1) out.push_back(i);
  }
  return out;
}

/// Exhaustive search over all of (i_1..i_{n-1}, t) in the open box.
inline std::optional<std::pair<std::vector<std::int64_t>, std::int64_t>> box_search(
    const std::vector<std::int64_t>& p, std::int64_t l) {
  const std::size_t n = p.size();
  std::vector<Int> cof(n, 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) cof[k] *= p[j];
    }
  }
  std::vector<std::int64_t> i(n, 1);
  while (true) {
    Int lhs = Int(i[n - 1]) * cof[n - 1];
    for (std::size_t k = 0; k + 1 < n; ++k) lhs -= Int(i[k]) * cof[k];
    if (lhs == l) return std::make_pair(std::vector<std::int64_t>(i.begin(), i.end() - 1), i[n - 1]);
    std::size_t k = n;
    while (k > 0) {
      if (++i[k - 1] < p[k - 1]) break;
      i[k - 1] = 1;
      --k;
    }
    if (k == 0) return std::nullopt;
  }
}

inline std::int64_t gcd_naive(std::int64_t a, std::int64_t b) {
  std::int64_t g = 1;
  for (std::int64_t d = 1; d <= std::min(a, b); ++d) {
    if (a % d == 0 && b % d == 0) g = d;
  }
  return std::min(a, b) == 0 ? std::max(a, b) : g;
}

}  // namespace oracle
