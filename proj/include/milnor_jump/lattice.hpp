#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "milnor_jump/error.hpp"

namespace milnor_jump {

/// Computational guards. Facet enumeration is combinatorial in the ambient
/// dimension and the oracles enumerate lattice boxes, so both are capped.
struct Limits {
  std::size_t max_dimension = 6;
  /// Upper bound on the number of candidates any single enumeration visits
  /// (lattice boxes, diophantine search boxes, subsets).
  std::uint64_t max_enumeration = 20'000'000;
  /// Upper bound on |J| for the brute-force jump oracle.
  std::uint64_t max_oracle_points = 200'000;
};

/// Exponent vector of a monomial: a tuple of non-negative integers.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) { validate(); }
  LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) { validate(); }

  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t k) const { return coords_[k]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
  }

  /// The point with coordinate k removed.
  LatticePoint without_axis(std::size_t k) const {
    std::vector<std::int64_t> c = coords_;
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(k));
    return LatticePoint(std::move(c));
  }

  /// The point with `value` inserted so that it becomes coordinate k.
  LatticePoint with_axis_inserted(std::size_t k, std::int64_t value) const {
    std::vector<std::int64_t> c = coords_;
    c.insert(c.begin() + static_cast<std::ptrdiff_t>(k), value);
    return LatticePoint(std::move(c));
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(coords_[k]);
    }
    return s + ")";
  }

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

 private:
  void validate() const {
    if (coords_.empty()) throw InvalidInput("lattice point must have dimension >= 1");
    for (std::int64_t c : coords_) {
      if (c < 0) throw InvalidInput("lattice point coordinates must be non-negative");
    }
  }

  std::vector<std::int64_t> coords_;
};

/// Finite set of lattice points of a common dimension, kept sorted and
/// duplicate free. May be empty (restrictions to subspaces can be).
class SupportSet {
 public:
  explicit SupportSet(std::size_t dimension) : dimension_(dimension) {
    if (dimension == 0) throw InvalidInput("support dimension must be >= 1");
  }

  SupportSet(std::size_t dimension, std::vector<LatticePoint> points) : SupportSet(dimension) {
    for (auto& p : points) insert(std::move(p));
  }

  /// Dimension inferred from the first point; throws on an empty list.
  static SupportSet from_points(std::vector<LatticePoint> points) {
    if (points.empty()) throw InvalidInput("support set must be non-empty");
    const std::size_t d = points.front().dimension();
    return SupportSet(d, std::move(points));
  }

  void insert(LatticePoint p) {
    if (p.dimension() != dimension_) {
      throw InvalidInput("dimension mismatch: point " + p.str() + " in support of dimension " +
                         std::to_string(dimension_));
    }
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) points_.insert(it, std::move(p));
  }

  SupportSet with(LatticePoint p) const {
    SupportSet s = *this;
    s.insert(std::move(p));
    return s;
  }

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<LatticePoint>& points() const { return points_; }
  bool contains(const LatticePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
  }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::size_t dimension_;
  std::vector<LatticePoint> points_;
};

/// True iff every coordinate axis carries a pure power of its variable.
inline bool is_convenient(const SupportSet& support) {
  for (std::size_t k = 0; k < support.dimension(); ++k) {
    const bool hit = std::any_of(support.points().begin(), support.points().end(), [&](const LatticePoint& q) {
      for (std::size_t j = 0; j < q.dimension(); ++j) {
        if ((j == k) != (q[j] != 0)) return false;
      }
      return true;
    });
    if (!hit) return false;
  }
  return true;
}

inline void check_dimension_guard(std::size_t d, const Limits& limits) {
  if (d > limits.max_dimension) {
    throw GuardExceeded("dimension " + std::to_string(d) + " exceeds the guard of " +
                        std::to_string(limits.max_dimension));
  }
}

}  // namespace milnor_jump
