#pragma once

// hstar-lab command line. run_cli() takes the arguments after the program
// name and returns the process exit code:
//   0 success, 1 internal or verification failure, 2 usage error,
//   3 scale-guard refusal, 4 --compare mismatch.

#include <chrono>
#include <cstddef>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hstar/baser.hpp"
#include "hstar/numeral.hpp"
#include "hstar/report.hpp"
#include "hstar/simplex.hpp"
#include "hstar/verify.hpp"

namespace hstar::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kScaleGuard = 3, kMismatch = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<Integer> parse_integer_list(const std::string& text, const char* flag) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const std::size_t first = item.find_first_not_of(" \t");
    const std::size_t last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? "" : item.substr(first, last - first + 1);
    std::size_t digits_from = (!item.empty() && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
    if (item.size() == digits_from || item.find_first_not_of("0123456789", digits_from) != std::string::npos)
      throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
    out.emplace_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline WeightVector parse_weights(const std::string& text) {
  auto q = parse_integer_list(text, "--q");
  for (const auto& x : q)
    if (x < 1) throw UsageError("--q: weights must be positive, got " + x.str());
  return WeightVector(std::move(q));
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "latex") return Format::latex;
  throw UsageError("--format: expected json, csv or latex");
}

inline std::string describe(const WeightVector& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.dimension(); ++i) s += (i ? "," : "") + q[i].str();
  return s + ")";
}

/// The three polynomials a computation path produces.
struct PathResult {
  IntPolynomial hstar, local;
};

}  // namespace detail

struct Options {
  std::string format = "json";
  bool timing = false;
  bool oracle = false;
  std::optional<std::size_t> center;
  std::string max_volume = "100000000";
  std::string max_box = "200000000";
  std::size_t max_enum_n = 9;
};

struct Limits {
  ScanLimits scan;
  OracleLimits oracle;
  EnumerationLimits enumeration;
};

inline Limits limits_from(const Options& o) {
  Limits l;
  l.scan.max_volume = detail::parse_integer_list(o.max_volume, "--max-volume").at(0);
  l.oracle.max_box = detail::parse_integer_list(o.max_box, "--max-box").at(0);
  l.enumeration.max_symmetric_n = o.max_enum_n;
  l.enumeration.max_factoradic_n = o.max_enum_n;
  return l;
}

/// Fills properties from the subject polynomial and runs the oracle if asked.
inline void finish_report(ComputationReport& r, const WeightVector& q, const IntPolynomial& subject,
                          const Options& o, const Limits& l) {
  r.q.assign(q.weights().begin(), q.weights().end());
  r.Q = q.normalized_volume();
  r.properties = analyse(subject, o.center);
  r.properties.t_set_size = eval_at_one(r.local_hstar);
  if (o.oracle) {
    if (oracle_enumerate(q, true, l.oracle) != coefficient_map(r.local_hstar) ||
        oracle_enumerate(q, false, l.oracle) != coefficient_map(r.hstar))
      throw std::runtime_error("lattice oracle disagrees with the computed polynomials for q = " +
                               detail::describe(q));
    r.oracle_checked = true;
  }
}

inline ComputationReport simplex_report(const WeightVector& q, bool subject_is_hstar, const Options& o,
                                        const Limits& l) {
  auto tally = height_tally(q, l.scan);
  ComputationReport r;
  r.hstar = IntPolynomial(tally.all);
  r.local_hstar = IntPolynomial(tally.open);
  r.method = "formula";
  finish_report(r, q, subject_is_hstar ? r.hstar : r.local_hstar, o, l);
  return r;
}

struct FamilySpec {
  std::string family;
  std::size_t n = 0;
  unsigned r = 0;
  std::string method;
  bool compare = false;
};

inline WeightVector family_weights(const FamilySpec& f) {
  if (f.family == "factoradic") return factoradic_weights(f.n);
  if (f.family == "base-r") return base_r_weights(f.r, f.n);
  return WeightVector(std::vector<Integer>(f.n, Integer(1)));
}

inline std::vector<std::string> family_methods(const FamilySpec& f) {
  if (f.family == "projective") return {"formula", "enum"};
  return {"recursion", "formula", "enum"};
}

inline detail::PathResult family_path(const FamilySpec& f, const std::string& method, const Limits& l) {
  const auto q = family_weights(f);
  if (f.family == "factoradic") {
    if (method == "enum") return {eulerian(f.n + 1, l.enumeration), factoradic_local_hstar_enum(f.n, l.enumeration)};
    if (method == "recursion") return {eulerian_by_recurrence(f.n + 1), factoradic_local_hstar_recursive(f.n)};
    auto t = height_tally(q, l.scan);
    return {IntPolynomial(t.all), IntPolynomial(t.open)};
  }
  if (f.family == "base-r") {
    if (method == "formula") return {base_r_hstar(f.r, f.n), base_r_local_hstar(f.r, f.n)};
    if (method == "recursion") {
      SectionFamily fam = f_sections(f.r, 0);
      for (std::size_t k = 1; k < f.n; ++k) fam = section_step(fam);
      IntPolynomial local = local_hstar_from_sections(fam);
      return {hstar_from_sections(section_step(fam)), local};
    }
    auto t = height_tally(q, l.scan);
    return {IntPolynomial(t.all), IntPolynomial(t.open)};
  }
  // projective
  if (method == "formula") {
    IntPolynomial all{std::vector<Integer>(f.n + 1, Integer(1))};
    return {all, all - IntPolynomial{1}};
  }
  auto t = height_tally(q, l.scan);
  return {IntPolynomial(t.all), IntPolynomial(t.open)};
}

inline ComputationReport family_report(const FamilySpec& f, const Options& o, const Limits& l, std::ostream& err) {
  auto methods = family_methods(f);
  if (std::find(methods.begin(), methods.end(), f.method) == methods.end())
    throw UsageError("--method " + f.method + " is not available for the " + f.family + " family");
  auto primary = family_path(f, f.method, l);
  if (f.compare) {
    for (const auto& m : methods) {
      if (m == f.method) continue;
      auto other = family_path(f, m, l);
      if (other.hstar != primary.hstar || other.local != primary.local) {
        err << "mismatch between " << f.method << " and " << m << ":\n"
            << "  " << f.method << ": h* = " << primary.hstar << ", local h* = " << primary.local << '\n'
            << "  " << m << ": h* = " << other.hstar << ", local h* = " << other.local << '\n';
        throw MismatchError("--compare found a mismatch");
      }
    }
    if (f.family == "base-r" && f.r == 2) {
      auto supp = base2_local_supp(f.n, l.enumeration);
      if (supp != primary.local) {
        err << "mismatch with binary digit sums: " << supp << " vs " << primary.local << '\n';
        throw MismatchError("--compare found a mismatch");
      }
    }
  }
  ComputationReport r;
  r.hstar = primary.hstar;
  r.local_hstar = primary.local;
  r.method = f.method;
  finish_report(r, family_weights(f), r.local_hstar, o, l);
  return r;
}

inline constexpr const char* kIndexingNote =
    "Row n of the triangle lists the coefficients of z^1, ..., z^n in the local\n"
    "h*-polynomial of the factoradic n-simplex: weights are the nonconstant\n"
    "coefficients of B_{n+1}, so the normalized volume is (n+1)! and the row sum is\n"
    "(n+1)!/3 for n >= 2 (1 for n = 1). The constant coefficient is always 0 and is\n"
    "omitted. Rows come from the refined recursion: L_3 = (z, 0, z^2),\n"
    "L_m = strict transform of L_{m-1} with phi = 0, ..., m-1, and row n is the sum\n"
    "of L_{n+1} (row 1 is z). So row 3, \"1 6 1\", belongs to the 3-simplex with\n"
    "weights (3, 8, 12) and volume 4! = 24.\n";

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart h* and local h* polynomials of the simplices conv(e_1, ..., e_n, -sum q_i e_i)",
               "hstar-lab"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "json (default), csv or latex");
    sub->add_flag("--timing", opt.timing, "fill provenance.runtime_ms");
  };
  auto add_guards = [&](CLI::App* sub) {
    sub->add_option("--max-volume", opt.max_volume, "largest Q scanned point by point");
    sub->add_option("--max-box", opt.max_box, "largest bounding box the lattice oracle visits");
    sub->add_option("--max-enum-n", opt.max_enum_n, "largest n for permutation enumeration");
  };

  std::string q_text;
  auto* hstar_cmd = app.add_subcommand("hstar", "h* of the simplex with weights q");
  auto* local_cmd = app.add_subcommand("local-hstar", "local h* of the simplex with weights q");
  for (auto* sub : {hstar_cmd, local_cmd}) {
    sub->add_option("--q", q_text, "comma-separated positive weights")->required();
    sub->add_flag("--oracle", opt.oracle, "cross-check against lattice-point enumeration");
    sub->add_option("--center", opt.center, "symmetry center to test");
    add_common(sub);
    add_guards(sub);
  }

  FamilySpec fam;
  std::string method;
  auto* family_cmd = app.add_subcommand("family", "factoradic, base-r or projective family");
  family_cmd->add_option("family", fam.family, "factoradic | base-r | projective")
      ->required()
      ->check(CLI::IsMember({"factoradic", "base-r", "projective"}));
  family_cmd->add_option("--n", fam.n, "dimension")->required()->check(CLI::PositiveNumber);
  family_cmd->add_option("--r", fam.r, "base (base-r family)");
  family_cmd->add_option("--method", method, "enum | recursion | formula")
      ->check(CLI::IsMember({"enum", "recursion", "formula"}));
  family_cmd->add_flag("--compare", fam.compare, "compute by every method; exit 4 on disagreement");
  family_cmd->add_flag("--oracle", opt.oracle, "cross-check against lattice-point enumeration");
  family_cmd->add_option("--center", opt.center, "symmetry center to test");
  add_common(family_cmd);
  add_guards(family_cmd);

  std::string poly_text;
  auto* props_cmd = app.add_subcommand("props", "distributional properties of a polynomial");
  props_cmd->add_option("--poly", poly_text, "coefficients c0,c1,...")->required();
  props_cmd->add_option("--center", opt.center, "symmetry center to test");
  props_cmd->add_option("--format", opt.format, "json (default), csv or latex");

  std::size_t rows = 7;
  bool explain = false;
  std::string triangle_family = "factoradic";
  auto* triangle_cmd = app.add_subcommand("triangle", "coefficient triangle of the factoradic family");
  triangle_cmd->add_option("--family", triangle_family)->check(CLI::IsMember({"factoradic"}));
  triangle_cmd->add_option("--rows", rows, "number of rows");
  triangle_cmd->add_option("--format", opt.format, "json (default), csv or latex");
  triangle_cmd->add_flag("--explain-indexing", explain, "describe the row-index convention and exit");

  std::vector<int> only;
  auto* verify_cmd = app.add_subcommand("verify", "run the reproduction battery");
  verify_cmd->add_option("--only", only, "criterion numbers to run");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };

  try {
    if (hstar_cmd->parsed() || local_cmd->parsed()) {
      const Format f = detail::parse_format(opt.format);
      const Limits l = limits_from(opt);
      auto r = simplex_report(detail::parse_weights(q_text), hstar_cmd->parsed(), opt, l);
      if (opt.timing) r.runtime_ms = elapsed();
      out << render(r, f);
      return kOk;
    }
    if (family_cmd->parsed()) {
      const Format f = detail::parse_format(opt.format);
      const Limits l = limits_from(opt);
      if (fam.family == "base-r" && fam.r < 2) throw UsageError("family base-r needs --r of at least 2");
      if (fam.family != "base-r" && fam.r != 0) throw UsageError("--r only applies to the base-r family");
      fam.method = method.empty() ? (fam.family == "factoradic" ? "recursion" : "formula") : method;
      auto r = family_report(fam, opt, l, err);
      if (opt.timing) r.runtime_ms = elapsed();
      out << render(r, f);
      return kOk;
    }
    if (props_cmd->parsed()) {
      const Format f = detail::parse_format(opt.format);
      IntPolynomial p(detail::parse_integer_list(poly_text, "--poly"));
      auto props = analyse(p, opt.center);
      if (opt.center && !props.symmetric_center)
        err << "not symmetric about " << *opt.center << '\n';
      out << render_props(p, props, f);
      return kOk;
    }
    if (triangle_cmd->parsed()) {
      if (explain) {
        out << kIndexingNote;
        return kOk;
      }
      const Format f = detail::parse_format(opt.format);
      out << render_triangle(triangle_coefficients(factoradic_triangle(rows)), f);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      bool all = true;
      for (const auto& c : verify::criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto res = verify::run(c);
        all = all && res.passed;
        out << verify::format_line(res) << '\n';
      }
      return all ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ScaleGuardError& e) {
    err << "refused by scale guard " << e.bound() << ": requested " << e.requested() << ", limit " << e.limit()
        << '\n';
    return kScaleGuard;
  } catch (const MismatchError& e) {
    err << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace hstar::cli
