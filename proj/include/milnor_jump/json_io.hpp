#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "milnor_jump/arithmetic.hpp"
#include "milnor_jump/error.hpp"
#include "milnor_jump/jump_algorithm.hpp"
#include "milnor_jump/lattice.hpp"

namespace milnor_jump {

using json = nlohmann::json;

/// Largest integer every IEEE-double JSON consumer represents exactly.
inline constexpr std::int64_t kMaxSafeJsonInteger = (std::int64_t{1} << 53) - 1;

/// Numbers beyond +-(2^53 - 1) are emitted as decimal strings.
inline json integer_json(const Integer& v) {
  if (v <= kMaxSafeJsonInteger && v >= -kMaxSafeJsonInteger) return static_cast<std::int64_t>(v);
  return v.str();
}

inline json point_json(const LatticePoint& p) { return json(std::vector<std::int64_t>(p.coords().begin(), p.coords().end())); }

/// Comma separated integers, e.g. "11,6,5". Strict: no blanks, signs only
/// as a leading '-', nothing trailing.
inline std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (text.empty()) throw InvalidInput("empty integer list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InvalidInput("malformed integer '" + std::string(item) + "' in list '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Support file: a JSON array of equal-length arrays of non-negative integers.
inline SupportSet parse_support_json(const json& doc) {
  if (!doc.is_array() || doc.empty()) throw InvalidInput("support file must be a non-empty JSON array of points");
  std::vector<LatticePoint> points;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.empty()) throw InvalidInput("support point must be a non-empty array of integers");
    std::vector<std::int64_t> coords;
    for (const auto& c : entry) {
      if (!c.is_number_integer()) throw InvalidInput("support coordinates must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    if (!points.empty() && coords.size() != points.front().dimension()) {
      throw InvalidInput("support points have mixed dimensions");
    }
    points.emplace_back(std::move(coords));
  }
  return SupportSet::from_points(std::move(points));
}

inline SupportSet load_support_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open support file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("support file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_support_json(doc);
}

inline json solution_json(const DiophantineSolution& s) {
  return json{{"i_low", s.i_low}, {"i_tilde", integer_json(s.i_tilde)}, {"admissible", s.admissible}};
}

/// Keys: lambda_nd, realizer, lambda_hyp (null for one variable), source;
/// with `trace` also hyperplane_jumps (1-based axis) and interior_trace.
inline json report_json(const JumpReport& r, bool trace) {
  json out{{"lambda_nd", integer_json(r.lambda_nd)},
           {"realizer", point_json(r.realizer.point())},
           {"lambda_hyp", r.lambda_hyp ? integer_json(*r.lambda_hyp) : json(nullptr)},
           {"source", to_string(r.source)}};
  if (trace) {
    out["exponents"] = r.base.exponent_vector();
    out["k0"] = r.k0 ? json(*r.k0 + 1) : json(nullptr);
    out["euclid_path"] = r.euclid_path;
    json hyp = json::array();
    for (const auto& h : r.hyperplane_jumps) {
      hyp.push_back({{"axis", h.axis + 1}, {"sub_jump", integer_json(h.sub_jump)}, {"lifted_jump", integer_json(h.lifted_jump)}});
    }
    out["hyperplane_jumps"] = std::move(hyp);
    json steps = json::array();
    for (const auto& s : r.interior_trace) {
      steps.push_back({{"l", integer_json(s.l)},
                       {"solution", s.solution ? solution_json(*s.solution) : json(nullptr)},
                       {"admissible", s.admissible}});
    }
    out["interior_trace"] = std::move(steps);
  }
  return out;
}

}  // namespace milnor_jump
