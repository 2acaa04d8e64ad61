#pragma once

// The reproduction battery: eleven checks, each with a wall-clock limit.
// Used by `hstar-lab verify` and by the acceptance test binary.

#include <chrono>
#include <cstddef>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hstar/baser.hpp"
#include "hstar/numeral.hpp"
#include "hstar/poly.hpp"
#include "hstar/realroot.hpp"
#include "hstar/report.hpp"
#include "hstar/sampling.hpp"
#include "hstar/simplex.hpp"

namespace hstar::verify {

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_ms;
  std::function<Outcome()> check;
};

struct Result {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double elapsed_ms;
  double limit_ms;
};

namespace detail {

/// Collects failures; the first few are kept for the report line.
class Ledger {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome finish(const std::string& summary) const {
    std::ostringstream os;
    os << summary << " [" << checks_ - failures_ << "/" << checks_ << " checks]";
    if (failures_) os << " failed: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

inline std::string show(const IntPolynomial& p) { return p.to_string(); }

inline const std::vector<std::vector<Integer>>& triangle_expected() {
  static const std::vector<std::vector<Integer>> rows{
      {1}, {1, 1}, {1, 6, 1}, {1, 19, 19, 1}, {1, 48, 142, 48, 1}, {1, 109, 730, 730, 109, 1},
      {1, 234, 3087, 6796, 3087, 234, 1}};
  return rows;
}

/// Random weight vectors with dimension <= max_n and Q <= max_q, fixed seed.
inline std::vector<WeightVector> random_weight_vectors(std::size_t count, std::size_t max_n, int max_q,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dim(1, max_n);
  std::vector<WeightVector> out;
  while (out.size() < count) {
    const std::size_t n = dim(rng);
    std::uniform_int_distribution<int> w(1, max_q - static_cast<int>(n));
    std::vector<Integer> q(n);
    Integer Q = 1;
    for (auto& x : q) {
      x = w(rng);
      Q += x;
    }
    if (Q <= max_q) out.emplace_back(std::move(q));
  }
  return out;
}

inline IntPolynomial binomial_power(std::size_t n) { return pow(IntPolynomial{1, 1}, static_cast<long long>(n)); }

// Local h* families shared by the symmetry, real-rootedness and gamma checks.
struct Sample {
  std::string label;
  std::size_t n;
  IntPolynomial local;
};

inline std::vector<Sample> factoradic_and_base_r_samples() {
  std::vector<Sample> out;
  auto tri = factoradic_triangle(8);
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"factoradic n=" + std::to_string(n), n, tri[n - 1]});
  for (unsigned r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 6; ++n)
      out.push_back({"base " + std::to_string(r) + " n=" + std::to_string(n), n, base_r_local_hstar(r, n)});
  return out;
}

}  // namespace detail

inline Outcome check_triangle() {
  detail::Ledger L;
  const auto& expected = detail::triangle_expected();
  auto rows = factoradic_triangle(expected.size());
  auto coeffs = triangle_coefficients(rows);
  L.require(coeffs == expected, "recursion rows differ from the expected triangle");
  // The emitted JSON must carry the same rows.
  auto parsed = Json::parse(render_triangle(coeffs, Format::json));
  std::vector<std::vector<Integer>> emitted;
  for (const auto& row : parsed.at("rows")) {
    std::vector<Integer> r;
    for (const auto& c : row) r.emplace_back(c.get<long long>());
    emitted.push_back(std::move(r));
  }
  L.require(emitted == expected, "rendered triangle differs");
  for (std::size_t n = 1; n <= 5; ++n)
    L.require(factoradic_local_hstar_enum(n) == rows[n - 1], "enumeration differs at row " + std::to_string(n));
  for (std::size_t n = 1; n <= 3; ++n)
    L.require(oracle_enumerate(factoradic_weights(n), true) == coefficient_map(rows[n - 1]),
              "lattice oracle differs at row " + std::to_string(n));
  return L.finish("7 rows exact; rows 1-5 by enumeration; rows 1-3 by lattice oracle");
}

inline Outcome check_eulerian_bridge() {
  detail::Ledger L;
  for (std::size_t n = 1; n <= 7; ++n) {
    auto h = hstar::hstar(factoradic_weights(n));
    auto a = eulerian(n + 1);
    L.require(h == a, "n=" + std::to_string(n) + ": " + detail::show(h) + " vs " + detail::show(a));
  }
  return L.finish("h* of the factoradic simplex equals A_{n+1}, n = 1..7");
}

inline Outcome check_mod6_count() {
  detail::Ledger L;
  for (std::size_t n = 2; n <= 8; ++n) {
    const Integer volume = factorial(n + 1);
    std::uint64_t brute = 0;
    for (std::uint64_t b = 1; b < volume; ++b)
      if (b % 6 == 1 || b % 6 == 5) ++brute;
    const auto tag = "n=" + std::to_string(n);
    L.require(count_mod6(n) == brute, tag + ": arithmetic count");
    L.require(brute * 3 == volume, tag + ": count is not (n+1)!/3");
    L.require(eval_at_one(factoradic_local_hstar_recursive(n)) == brute, tag + ": recursion total");
    L.require(eval_at_one(local_hstar(factoradic_weights(n))) == brute, tag + ": height scan total");
  }
  return L.finish("local h*(1) = #{b = 1,5 mod 6} = (n+1)!/3, n = 2..8");
}

inline Outcome check_base2() {
  detail::Ledger L;
  for (std::size_t n = 1; n <= 14; ++n) {
    auto q = base_r_weights(2, n);
    auto tally = height_tally(q);
    const auto expected_local = detail::binomial_power(n - 1).shifted(1);
    const auto tag = "n=" + std::to_string(n);
    L.require(IntPolynomial(tally.all) == detail::binomial_power(n), tag + ": h*");
    L.require(IntPolynomial(tally.open) == expected_local, tag + ": local h*");
    L.require(base2_local_supp(n) == expected_local, tag + ": binary digit sums");
  }
  return L.finish("h* = (1+z)^n and local h* = z(1+z)^(n-1), n = 1..14");
}

inline Outcome check_base_r() {
  detail::Ledger L;
  for (unsigned r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 6; ++n) {
      auto formula = base_r_local_hstar(r, n);
      auto direct = local_hstar(base_r_weights(r, n));
      auto diff = base_r_hstar(r, n) - base_r_hstar(r, n - 1);
      const auto tag = "r=" + std::to_string(r) + " n=" + std::to_string(n);
      L.require(formula == direct, tag + ": formula vs enumeration");
      L.require(direct == diff, tag + ": enumeration vs h* difference");
    }
  return L.finish("section formula = T_q enumeration = h* difference, r = 2..6, n = 1..6");
}

inline Outcome check_oracle() {
  detail::Ledger L;
  for (const auto& q : detail::random_weight_vectors(50, 4, 200, 20261016)) {
    std::string tag = "q=(";
    for (std::size_t i = 0; i < q.dimension(); ++i) tag += (i ? "," : "") + q[i].str();
    tag += ")";
    L.require(oracle_enumerate(q, true) == coefficient_map(local_hstar(q)), tag + " open");
    L.require(oracle_enumerate(q, false) == coefficient_map(hstar::hstar(q)), tag + " half-open");
  }
  return L.finish("lattice oracle = height formulas on 50 random q (n <= 4, Q <= 200)");
}

inline Outcome check_symmetry() {
  detail::Ledger L;
  for (const auto& s : detail::factoradic_and_base_r_samples())
    L.require(is_symmetric(s.local, s.n + 1), s.label);
  for (std::size_t n = 1; n <= 14; ++n)
    L.require(is_symmetric(local_hstar(base_r_weights(2, n)), n + 1), "base 2 n=" + std::to_string(n));
  for (const auto& q : detail::random_weight_vectors(50, 4, 200, 20261016))
    L.require(is_symmetric(local_hstar(q), q.dimension() + 1), "random q");
  const auto h = hstar::hstar(WeightVector{2, 6});
  L.require(h == IntPolynomial({1, 5, 3}), "h*(2,6) = " + detail::show(h));
  L.require(!is_symmetric(h, 2) && !is_symmetric(h, h.low_degree() + static_cast<std::size_t>(h.degree())),
            "h*(2,6) reported symmetric");
  return L.finish("every local h* symmetric about n+1; h*(2,6) = 1+5z+3z^2 is not");
}

inline Outcome check_real_rooted() {
  detail::Ledger L;
  for (const auto& s : detail::factoradic_and_base_r_samples()) L.require(is_real_rooted(s.local), s.label);
  L.require(!is_real_rooted(IntPolynomial{1, 1, 1}), "1+z+z^2 certified real-rooted");
  return L.finish("Sturm certificates: factoradic n <= 8, base r <= 6 n <= 6; 1+z+z^2 rejected");
}

inline Outcome check_gamma() {
  detail::Ledger L;
  for (const auto& s : detail::factoradic_and_base_r_samples())
    L.require(gamma_expansion(s.local, s.n + 1).nonnegative(), s.label);
  L.require(gamma_expansion(IntPolynomial{0, 1, 6, 1}, 4).gammas == std::vector<Integer>{0, 1, 4},
            "gamma(z+6z^2+z^3) != (0,1,4)");
  return L.finish("gamma vectors at center n+1 nonnegative; z+6z^2+z^3 -> (0,1,4)");
}

inline Outcome check_interlacing() {
  detail::Ledger L;
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> out_len(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    auto fs = sampling::random_interlacing_sequence(rng, 4, 4, 5);
    const auto tag = "sequence " + std::to_string(trial);
    L.require(is_interlacing_sequence(fs), tag + ": generator");
    auto strict = strict_transform(fs, sampling::random_monotone(rng, out_len(rng), fs.size()));
    L.require(is_interlacing_sequence(strict), tag + ": strict transform");
    auto overlap = overlap_transform(fs, sampling::random_monotone(rng, fs.size(), fs.size() - 1));
    L.require(is_interlacing_sequence(overlap), tag + ": overlap transform");
  }
  return L.finish("strict and overlap transforms preserve interlacing on 200 random sequences");
}

inline Outcome check_performance() {
  detail::Ledger L;
  auto rows = factoradic_triangle(25);
  L.require(rows.size() == 25, "triangle stopped early");
  for (std::size_t n = 1; n <= rows.size(); ++n) {
    // (n+1)!/3 lattice points for n >= 2.
    L.require(eval_at_one(rows[n - 1]) == count_mod6(n), "row " + std::to_string(n) + " total");
  }
  bool refused = false;
  try {
    factoradic_local_hstar_enum(25);
  } catch (const ScaleGuardError&) {
    refused = true;
  }
  L.require(refused, "enumeration of 26! values was not refused");
  return L.finish("25 rows by recursion; enumeration refused at n = 25");
}

inline std::vector<Criterion> criteria() {
  return {
      {1, "factoradic triangle", 10'000, check_triangle},
      {2, "h* / Eulerian bridge", 30'000, check_eulerian_bridge},
      {3, "mod-6 count", 30'000, check_mod6_count},
      {4, "base-2 closed forms", 10'000, check_base2},
      {5, "base-r triple equality", 30'000, check_base_r},
      {6, "oracle equivalence", 60'000, check_oracle},
      {7, "symmetry law", 60'000, check_symmetry},
      {8, "real-rootedness certificates", 30'000, check_real_rooted},
      {9, "gamma-nonnegativity", 30'000, check_gamma},
      {10, "interlacing transforms", 60'000, check_interlacing},
      {11, "recursion performance", 5'000, check_performance},
  };
}

inline Result run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ms > c.limit_ms) {
    o.passed = false;
    o.detail += " (time limit exceeded)";
  }
  return {c.id, c.title, o.passed, o.detail, ms, c.limit_ms};
}

inline std::string format_line(const Result& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.title << ": " << r.detail
     << "  (" << static_cast<long long>(r.elapsed_ms) << " ms, limit " << static_cast<long long>(r.limit_ms)
     << " ms)";
  return os.str();
}

}  // namespace hstar::verify
