#pragma once

// Base-r simplices: weights ((r-1), (r-1)r, ..., (r-1)r^(n-1)), normalized
// volume r^n. Their h* and local h* polynomials are combinations of the
// congruence sections of f_(r,n) = (1 + z + ... + z^(r-1))^n taken modulo r-1.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hstar/integer.hpp"
#include "hstar/numeral.hpp"
#include "hstar/poly.hpp"
#include "hstar/realroot.hpp"
#include "hstar/simplex.hpp"

namespace hstar {

struct SectionFamily {
  unsigned r = 2;
  std::size_t n = 0;
  /// f^<r-1,0>, ..., f^<r-1,r-2>
  std::vector<IntPolynomial> sections;

  IntPolynomial reassemble() const { return reassemble_sections(sections); }

  friend bool operator==(const SectionFamily&, const SectionFamily&) = default;
};

namespace detail {
inline void require_base(unsigned r) {
  if (r < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(r));
}
}  // namespace detail

inline WeightVector base_r_weights(unsigned r, std::size_t n) {
  detail::require_base(r);
  if (n == 0) throw std::invalid_argument("base_r_weights: n must be positive");
  std::vector<Integer> q;
  Integer w = r - 1;
  for (std::size_t i = 0; i < n; ++i) {
    q.push_back(w);
    w *= r;
  }
  return WeightVector(std::move(q));
}

/// (1 + z + ... + z^(r-1))^n
inline IntPolynomial f_poly(unsigned r, std::size_t n) {
  detail::require_base(r);
  return pow(IntPolynomial(std::vector<Integer>(r, Integer(1))), static_cast<long long>(n));
}

inline SectionFamily f_sections(unsigned r, std::size_t n) {
  return SectionFamily{r, n, congruence_sections(f_poly(r, n), r - 1)};
}

/// Sections for n+1 from those for n:
/// new[l] = sum_{i<=l} prev[i] + z sum_{i>=l} prev[i].
/// This is the overlap transform applied to the reversed list.
inline SectionFamily section_step(const SectionFamily& prev) {
  std::vector<IntPolynomial> reversed(prev.sections.rbegin(), prev.sections.rend());
  std::vector<std::size_t> phi(reversed.size());
  std::iota(phi.begin(), phi.end(), std::size_t{0});
  auto g = overlap_transform(reversed, phi);
  return SectionFamily{prev.r, prev.n + 1, std::vector<IntPolynomial>(g.rbegin(), g.rend())};
}

/// f^<r-1,0> + z * sum_{l=1}^{r-2} f^<r-1,l>, with the sections read as polynomials in z.
inline IntPolynomial hstar_from_sections(const SectionFamily& fam) {
  IntPolynomial tail;
  for (std::size_t l = 1; l < fam.sections.size(); ++l) tail += fam.sections[l];
  return fam.sections.front() + tail.shifted(1);
}

inline IntPolynomial base_r_hstar(unsigned r, std::size_t n) { return hstar_from_sections(f_sections(r, n)); }

/// z sum_i F_i + z sum_{l=1}^{r-2} (sum_{i<l} F_i + z sum_{i>=l} F_i), F = sections of (r, n-1).
inline IntPolynomial local_hstar_from_sections(const SectionFamily& prev) {
  const std::size_t s = prev.sections.size();
  IntPolynomial total;
  for (const auto& f : prev.sections) total += f;
  IntPolynomial out = total.shifted(1);
  if (s >= 2) {
    // g_{l-1} for l = s-1, ..., 1 come from the strict transform of the
    // reversed list with phi = 1, ..., s-1.
    std::vector<IntPolynomial> reversed(prev.sections.rbegin(), prev.sections.rend());
    std::vector<std::size_t> phi(s - 1);
    std::iota(phi.begin(), phi.end(), std::size_t{1});
    IntPolynomial inner;
    for (const auto& g : strict_transform(reversed, phi)) inner += g;
    out += inner.shifted(1);
  }
  return out;
}

inline IntPolynomial base_r_local_hstar(unsigned r, std::size_t n) {
  if (n == 0) throw std::invalid_argument("base_r_local_hstar: n must be positive");
  return local_hstar_from_sections(f_sections(r, n - 1));
}

/// sum over odd 0 < b < 2^n of z^supp2(b).
inline IntPolynomial base2_local_supp(std::size_t n, const EnumerationLimits& limits = {}) {
  if (n == 0) throw std::invalid_argument("base2_local_supp: n must be positive");
  if (n > limits.max_binary_n) throw ScaleGuardError("max-binary-n", n, limits.max_binary_n);
  std::vector<Integer> c(n + 1);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t b = 1; b < end; b += 2) ++c[static_cast<std::size_t>(std::popcount(b))];
  return IntPolynomial(std::move(c));
}

}  // namespace hstar
