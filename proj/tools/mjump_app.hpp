#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests drive it in-process with captured streams.
//
// Exit codes: 0 success, 2 invalid input (or a guard), 3 internal
// integrality failure, 4 verification failure (including --check-oracle).

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "milnor_jump/milnor_jump.hpp"

namespace milnor_jump::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kIntegrality = 3, kVerifyFailed = 4 };

namespace detail {

inline std::string integer_text(const Integer& v) { return v.str(); }

inline void print_field(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(12) << key << value << '\n';
}

inline std::string dioph_identity(const BrieskornPham& p, const DiophantineSolution& s) {
  std::ostringstream os;
  const std::size_t n = p.dimension();
  for (std::size_t k = 0; k + 1 < n; ++k) os << '-' << s.i_low[k] << "*p'" << k + 1 << ' ';
  os << '+' << s.i_tilde << "*p'" << n;
  return os.str();
}

inline void print_report_text(std::ostream& out, const JumpReport& r, bool trace) {
  print_field(out, "exponents", r.base.str());
  print_field(out, "lambda_nd", integer_text(r.lambda_nd));
  print_field(out, "realizer", r.realizer.str());
  print_field(out, "lambda_hyp", r.lambda_hyp ? integer_text(*r.lambda_hyp) : "-");
  print_field(out, "source", to_string(r.source));
  if (!trace) return;
  const std::size_t n = r.base.dimension();
  for (const auto& h : r.hyperplane_jumps) {
    print_field(out, "hyperplane",
                "k=" + std::to_string(h.axis + 1) + ": lambda_" + std::to_string(h.axis + 1) + " = " +
                    integer_text(h.sub_jump) + ", lifted " + integer_text(h.sub_jump) + "*(" +
                    std::to_string(r.base[h.axis]) + "-1) = " + integer_text(h.lifted_jump));
  }
  for (const auto& s : r.interior_trace) {
    std::string line = "l=" + integer_text(s.l) + ": ";
    if (!s.solution) {
      line += "no solution with 0 < i_k < p_k";
    } else {
      line += dioph_identity(r.base, *s.solution) + " = " + integer_text(s.l) + ", i_tilde=" +
              integer_text(s.solution->i_tilde);
      if (s.admissible) {
        line += " < p" + std::to_string(n) + "=" + std::to_string(r.base[n - 1]) + ", admissible";
      } else {
        line += " >= p" + std::to_string(n) + "=" + std::to_string(r.base[n - 1]) + ", inadmissible";
      }
    }
    print_field(out, "interior", line);
  }
  if (r.source == JumpSource::hyperplane && r.k0) {
    print_field(out, "conclusion", "no admissible l < lambda_hyp; hyperplane k0=" + std::to_string(*r.k0 + 1));
  }
}

inline BrieskornPham parse_exponents(const std::string& text) { return BrieskornPham(parse_integer_list(text)); }

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton numbers and non-degenerate Milnor-number jumps of Brieskorn-Pham singularities", "mjump"};
  app.require_subcommand(1);

  bool as_json = false;
  Limits limits;
  app.add_flag("--json", as_json, "Emit JSON instead of text");
  app.add_option("--max-dimension", limits.max_dimension, "Ambient dimension guard")->capture_default_str();
  app.add_option("--max-enumeration", limits.max_enumeration, "Enumeration guard")
      ->capture_default_str()
      ->envname("MJUMP_MAX_ENUMERATION");
  app.add_option("--max-oracle-points", limits.max_oracle_points, "Guard on |J| for the brute-force oracle")
      ->capture_default_str();

  std::string exponents;
  std::string monomial;
  std::string support_path;
  bool trace = false;
  bool check_oracle = false;
  std::size_t n_vars = 3;
  std::int64_t p_max = 6;

  auto* mu = app.add_subcommand("mu", "Milnor number prod(p_k - 1)")->fallthrough();
  mu->add_option("exponents", exponents, "p1,...,pn")->required();

  auto* nu = app.add_subcommand("nu", "Newton number of a convenient support file")->fallthrough();
  nu->add_option("--support", support_path, "JSON array of integer arrays")->required();

  auto* jump = app.add_subcommand("jump", "Non-degenerate jump by the inductive algorithm")->fallthrough();
  jump->add_option("exponents", exponents, "p1,...,pn")->required();
  jump->add_flag("--trace", trace, "Include hyperplane and diophantine trace");
  jump->add_flag("--check-oracle", check_oracle, "Cross-check against the brute-force oracle");

  auto* deformation = app.add_subcommand("deformation", "Jump of a single monomial deformation")->fallthrough();
  deformation->add_option("exponents", exponents, "p1,...,pn")->required();
  deformation->add_option("--monomial", monomial, "i1,...,in")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force minimum over all points under the diagram")->fallthrough();
  oracle->add_option("exponents", exponents, "p1,...,pn")->required();

  auto* verify = app.add_subcommand("verify", "Run the invariant suites over a box of exponents")->fallthrough();
  verify->add_option("--n", n_vars, "Maximum number of variables")->capture_default_str();
  verify->add_option("--pmax", p_max, "Maximum exponent")->capture_default_str();

  auto* table = app.add_subcommand("table", "Table of lambda_nd values")->fallthrough();
  table->add_option("--n", n_vars, "Number of variables")->required();
  table->add_option("--pmax", p_max, "Maximum exponent")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (*mu) {
      const Integer m = milnor_number(detail::parse_exponents(exponents));
      if (as_json) {
        out << json{{"mu", integer_json(m)}}.dump() << '\n';
      } else {
        out << m << '\n';
      }
      return kOk;
    }

    if (*nu) {
      const SupportSet s = load_support_file(support_path);
      if (!is_convenient(s)) throw InvalidInput("support in '" + support_path + "' is not convenient");
      const Integer v = newton_number(s, limits);
      if (as_json) {
        out << json{{"nu", integer_json(v)}}.dump() << '\n';
      } else {
        out << v << '\n';
      }
      return kOk;
    }

    if (*jump) {
      const BrieskornPham p = detail::parse_exponents(exponents);
      check_dimension_guard(p.dimension(), limits);
      const JumpReport r = lambda_nd(p, {limits, true});
      std::optional<OracleResult> brute;
      if (check_oracle) brute = lambda_nd_oracle(p, limits);
      const bool agrees = !brute || brute->value == r.lambda_nd;
      if (as_json) {
        json doc = report_json(r, trace);
        if (brute) {
          doc["oracle"] = {{"lambda_nd", integer_json(brute->value)},
                           {"realizer", point_json(brute->realizer.point())},
                           {"agrees", agrees}};
        }
        out << doc.dump() << '\n';
      } else {
        detail::print_report_text(out, r, trace);
        if (brute) {
          detail::print_field(out, "oracle",
                              brute->value.str() + " at " + brute->realizer.str() + (agrees ? " [agrees]" : " [DISAGREES]"));
        }
      }
      if (!agrees) {
        err << "mjump: fast path " << r.lambda_nd << " and oracle " << brute->value << " disagree\n";
        return kVerifyFailed;
      }
      return kOk;
    }

    if (*deformation) {
      const BrieskornPham p = detail::parse_exponents(exponents);
      check_dimension_guard(p.dimension(), limits);
      const MonomialDeformation d(p, MonomialIndex(LatticePoint(parse_integer_list(monomial))));
      const Integer by_oracle = jump_oracle(d, limits);
      std::optional<Integer> by_interior, by_boundary;
      if (is_interior(d.index())) {
        by_interior = jump_interior(d);
      } else {
        by_boundary = jump_boundary(d);
      }
      const Integer dispatched = jump_monomial(d);
      if (dispatched != by_oracle) {
        err << "mjump: closed form " << dispatched << " disagrees with Newton-number difference " << by_oracle << '\n';
        return kIntegrality;
      }
      if (as_json) {
        out << json{{"monomial", point_json(d.index().point())},
                    {"oracle", integer_json(by_oracle)},
                    {"interior", by_interior ? integer_json(*by_interior) : json(nullptr)},
                    {"boundary", by_boundary ? integer_json(*by_boundary) : json(nullptr)},
                    {"jump", integer_json(dispatched)}}
                   .dump()
            << '\n';
      } else {
        detail::print_field(out, "monomial", d.index().str());
        detail::print_field(out, "oracle", by_oracle.str());
        detail::print_field(out, "interior", by_interior ? by_interior->str() : "-");
        detail::print_field(out, "boundary", by_boundary ? by_boundary->str() : "-");
        detail::print_field(out, "jump", dispatched.str());
      }
      return kOk;
    }

    if (*oracle) {
      const BrieskornPham p = detail::parse_exponents(exponents);
      const OracleResult r = lambda_nd_oracle(p, limits);
      if (as_json) {
        out << json{{"lambda_nd", integer_json(r.value)}, {"realizer", point_json(r.realizer.point())}}.dump() << '\n';
      } else {
        detail::print_field(out, "lambda_nd", r.value.str());
        detail::print_field(out, "realizer", r.realizer.str());
      }
      return kOk;
    }

    if (*verify || *table) {
      if (n_vars < 1) throw InvalidInput("--n must be >= 1");
      if (p_max < 2) throw InvalidInput("--pmax must be >= 2");
      check_dimension_guard(n_vars, limits);
    }

    if (*verify) {
      const auto suites = run_verification(n_vars, p_max, limits);
      const bool all_ok = std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
      if (as_json) {
        json arr = json::array();
        for (const auto& s : suites) {
          arr.push_back({{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}, {"failures", s.failures}});
        }
        out << json{{"ok", all_ok}, {"suites", arr}}.dump() << '\n';
      } else {
        for (const auto& s : suites) {
          out << (s.ok() ? "PASS " : "FAIL ") << std::left << std::setw(28) << s.name << " passed=" << s.passed
              << " failed=" << s.failed << '\n';
          for (const auto& f : s.failures) out << "     " << f << '\n';
        }
      }
      return all_ok ? kOk : kVerifyFailed;
    }

    if (*table) {
      const auto tuples = exponent_box(n_vars, n_vars, p_max);
      if (as_json) {
        json rows = json::array();
        for (const auto& p : tuples) {
          rows.push_back({{"exponents", p.exponent_vector()}, {"lambda_nd", integer_json(lambda_nd(p, {limits, true}).lambda_nd)}});
        }
        out << json{{"n", n_vars}, {"pmax", p_max}, {"rows", rows}}.dump() << '\n';
      } else if (n_vars == 2) {
        out << "p1\\p2";
        for (std::int64_t b = 2; b <= p_max; ++b) out << std::setw(4) << b;
        out << '\n';
        for (std::int64_t a = 2; a <= p_max; ++a) {
          out << std::setw(5) << a;
          for (std::int64_t b = 2; b <= p_max; ++b) out << std::setw(4) << lambda_nd(BrieskornPham{a, b}, {limits, true}).lambda_nd;
          out << '\n';
        }
      } else {
        for (const auto& p : tuples) {
          out << std::left << std::setw(3 * static_cast<int>(n_vars) + 2) << p.str() << lambda_nd(p, {limits, true}).lambda_nd
              << '\n';
        }
      }
      return kOk;
    }
  } catch (const InvalidInput& e) {
    err << "mjump: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IntegralityViolation& e) {
    err << "mjump: internal error: " << e.what() << '\n';
    return kIntegrality;
  }
  return kInvalidInput;
}

}  // namespace milnor_jump::cli
