#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/lattice.hpp"

namespace milnor_jump {

/// z1^p1 + ... + zn^pn with every exponent >= 2.
class BrieskornPham {
 public:
  explicit BrieskornPham(std::vector<std::int64_t> exponents) : p_(std::move(exponents)) {
    if (p_.empty()) throw InvalidInput("Brieskorn-Pham exponent vector must be non-empty");
    for (std::int64_t e : p_) {
      if (e < 2) throw InvalidInput("Brieskorn-Pham exponents must be >= 2, got " + std::to_string(e));
    }
  }
  BrieskornPham(std::initializer_list<std::int64_t> exponents)
      : BrieskornPham(std::vector<std::int64_t>(exponents)) {}

  std::size_t dimension() const { return p_.size(); }
  std::int64_t operator[](std::size_t k) const { return p_[k]; }
  std::span<const std::int64_t> exponents() const { return p_; }
  const std::vector<std::int64_t>& exponent_vector() const { return p_; }

  /// p1 * ... * pn
  Integer product() const {
    Integer r = 1;
    for (std::int64_t e : p_) r *= e;
    return r;
  }

  /// p'_k: product of all exponents except p_k.
  Integer cofactor(std::size_t k) const {
    Integer r = 1;
    for (std::size_t j = 0; j < p_.size(); ++j) {
      if (j != k) r *= p_[j];
    }
    return r;
  }

  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < p_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(p_[k]);
    }
    return s;
  }

  friend auto operator<=>(const BrieskornPham&, const BrieskornPham&) = default;
  friend bool operator==(const BrieskornPham&, const BrieskornPham&) = default;

 private:
  std::vector<std::int64_t> p_;
};

/// A non-zero lattice point, read as the exponent of the monomial z^i.
class MonomialIndex {
 public:
  explicit MonomialIndex(LatticePoint point) : point_(std::move(point)) {
    if (point_.is_zero()) throw InvalidInput("monomial index must be non-zero");
  }
  MonomialIndex(std::initializer_list<std::int64_t> coords) : MonomialIndex(LatticePoint(coords)) {}

  const LatticePoint& point() const { return point_; }
  std::size_t dimension() const { return point_.dimension(); }
  std::int64_t operator[](std::size_t k) const { return point_[k]; }
  std::string str() const { return point_.str(); }

  friend auto operator<=>(const MonomialIndex&, const MonomialIndex&) = default;
  friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;

 private:
  LatticePoint point_;
};

/// mu = prod (p_k - 1)
inline Integer milnor_number(const BrieskornPham& p) {
  Integer r = 1;
  for (std::int64_t e : p.exponents()) r *= (e - 1);
  return r;
}

inline SupportSet bp_support(const BrieskornPham& p) {
  const std::size_t n = p.dimension();
  SupportSet s(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::int64_t> c(n, 0);
    c[k] = p[k];
    s.insert(LatticePoint(std::move(c)));
  }
  return s;
}

/// Drops the k-th variable (0-based).
inline BrieskornPham truncate(const BrieskornPham& p, std::size_t k) {
  if (p.dimension() < 2) throw InvalidInput("truncate: needs at least two variables");
  if (k >= p.dimension()) throw InvalidInput("truncate: axis index out of range");
  std::vector<std::int64_t> e = p.exponent_vector();
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(k));
  return BrieskornPham(std::move(e));
}

/// sum_k i_k p'_k. The point lies strictly under the diagram iff this is
/// below prod p, and on it iff equal.
inline Integer scaled_diagram_level(const BrieskornPham& p, const LatticePoint& i) {
  if (i.dimension() != p.dimension()) throw InvalidInput("monomial dimension does not match exponents");
  Integer s = 0;
  for (std::size_t k = 0; k < p.dimension(); ++k) s += Integer(i[k]) * p.cofactor(k);
  return s;
}

inline bool lies_under_diagram(const BrieskornPham& p, const LatticePoint& i) {
  return scaled_diagram_level(p, i) < p.product();
}

/// The set J: all non-zero i with sum i_k/p_k < 1, lexicographically sorted.
inline std::vector<MonomialIndex> under_diagram_points(const BrieskornPham& p, const Limits& limits = {}) {
  const std::size_t n = p.dimension();
  if (p.product() > limits.max_enumeration) {
    throw GuardExceeded("under_diagram_points: lattice box of size " + p.product().str() +
                        " exceeds the enumeration guard");
  }
  std::vector<MonomialIndex> out;
  std::vector<std::int64_t> c(n, 0);
  // Odometer over the box [0,p_1) x ... x [0,p_n), last coordinate fastest.
  while (true) {
    std::size_t k = n;
    while (k > 0) {
      if (++c[k - 1] < p[k - 1]) break;
      c[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    LatticePoint q(c);
    if (lies_under_diagram(p, q)) out.emplace_back(std::move(q));
  }
  return out;
}

inline bool is_interior(const MonomialIndex& i) {
  for (std::int64_t c : i.point().coords()) {
    if (c <= 0) return false;
  }
  return true;
}

}  // namespace milnor_jump
