#pragma once

// Exact real-root certification for integer polynomials.
//
// Sturm chains are built from primitive pseudo-remainders scaled by positive
// factors only, so every chain member has the sign pattern of the textbook
// rational chain. Roots are isolated by bisection with rational endpoints.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hstar/integer.hpp"
#include "hstar/poly.hpp"

namespace hstar {

namespace detail {

inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = gcd(g, Integer(abs(c)));
    if (g == 1) break;
  }
  return g;
}

/// Primitive part with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.leading().sign() < 0) g = -g;
  std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

/// Primitive part keeping the sign of the leading coefficient.
inline IntPolynomial positive_content_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  std::vector<Integer> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : v) c /= g;
  return IntPolynomial(std::move(v));
}

/// R with |lc(b)|^(deg a - deg b + 1) * a = Q*b + R, deg R < deg b.
inline IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer lc = b.leading();
  const Integer lc_abs = abs(lc);
  for (std::size_t top = r.size(); top-- > db;) {
    // r <- |lc| r - sgn(lc) r_top z^(top-db) b
    const Integer t = r[top];
    for (auto& c : r) c *= lc_abs;
    if (!t.is_zero()) {
      const Integer factor = lc.sign() > 0 ? t : Integer(-t);
      for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= factor * b.coeffs()[j];
    }
  }
  return IntPolynomial(std::move(r));
}

inline IntPolynomial gcd_primitive(IntPolynomial a, IntPolynomial b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(positive_pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Exact quotient a / b in Z[z]; b must be primitive and divide a.
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::logic_error("divide_exact: inexact division");
  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Integer> q(r.size() - db);
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top].is_zero()) continue;
    Integer t, rem;
    divide_qr(r[top], b.leading(), t, rem);
    if (!rem.is_zero()) throw std::logic_error("divide_exact: inexact division");
    q[top - db] = t;
    for (std::size_t j = 0; j <= db; ++j) r[top - db + j] -= t * b.coeffs()[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (!r[i].is_zero()) throw std::logic_error("divide_exact: inexact division");
  return IntPolynomial(std::move(q));
}

inline Integer cauchy_bound(const IntPolynomial& p) {
  // 1 + max |c_i / c_d|, rounded up.
  Integer m = 0;
  const Integer lc = abs(p.leading());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    Integer c = abs(p.coeffs()[i]);
    Integer q = c / lc;
    if (q * lc != c) ++q;
    m = std::max(m, q);
  }
  return m + 1;
}

inline int sign_at(const IntPolynomial& p, const Rational& x) {
  return p.sign_at(numerator(x), denominator(x));
}

}  // namespace detail

/// Squarefree part p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return IntPolynomial::constant(1);
  IntPolynomial g = detail::gcd_primitive(p, p.derivative());
  return detail::primitive_part(detail::divide_exact(detail::primitive_part(p), g));
}

class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
    chain_.push_back(detail::positive_content_part(p));
    if (p.degree() == 0) return;
    chain_.push_back(detail::positive_content_part(p.derivative()));
    while (chain_.back().degree() > 0) {
      IntPolynomial r = detail::positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(detail::positive_content_part(-r));
    }
  }

  /// Sign changes of the chain at x, zeros dropped.
  std::size_t variations(const Rational& x) const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& f : chain_) {
      int s = detail::sign_at(f, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  /// Distinct real roots in (lo, hi].
  std::size_t count(const Rational& lo, const Rational& hi) const {
    std::size_t a = variations(lo), b = variations(hi);
    return a > b ? a - b : 0;
  }

  std::span<const IntPolynomial> members() const noexcept { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Half-open rational interval (lo, hi].
struct RootInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct RootCertificate {
  std::size_t squarefree_degree = 0;
  std::size_t real_root_count = 0;
  /// Ascending, pairwise disjoint, one distinct root each.
  std::vector<RootInterval> isolating_intervals;

  bool real_rooted() const noexcept { return real_root_count == squarefree_degree; }
};

namespace detail {

inline void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi, std::size_t n,
                    std::vector<RootInterval>& out) {
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  std::size_t left = chain.count(lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, n - left, out);
}

/// Isolating intervals for the distinct real roots of a squarefree polynomial.
inline std::vector<RootInterval> isolate_roots(const IntPolynomial& squarefree) {
  std::vector<RootInterval> out;
  if (squarefree.degree() <= 0) return out;
  SturmChain chain(squarefree);
  Rational b(cauchy_bound(squarefree));
  isolate(chain, -b, b, chain.count(-b, b), out);
  return out;
}

}  // namespace detail

inline RootCertificate sturm_certificate(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_certificate: zero polynomial");
  IntPolynomial sf = squarefree_part(p);
  RootCertificate cert;
  cert.squarefree_degree = static_cast<std::size_t>(sf.degree());
  cert.isolating_intervals = detail::isolate_roots(sf);
  cert.real_root_count = cert.isolating_intervals.size();
  return cert;
}

inline bool is_real_rooted(const IntPolynomial& p) {
  if (p.degree() <= 1) return true;
  return sturm_certificate(p).real_rooted();
}

namespace detail {

/// Does the unique root of `sf` inside `iv` also annihilate f?
inline bool vanishes_at(const IntPolynomial& f, const IntPolynomial& sf, const RootInterval& iv) {
  if (f.is_zero()) return true;
  IntPolynomial g = gcd_primitive(f, sf);
  if (g.degree() <= 0) return false;
  return SturmChain(g).count(iv.lo, iv.hi) > 0;
}

inline std::size_t multiplicity(IntPolynomial f, const IntPolynomial& sf, const RootInterval& iv) {
  std::size_t m = 0;
  while (!f.is_zero() && f.degree() > 0 && vanishes_at(f, sf, iv)) {
    ++m;
    f = f.derivative();
  }
  return m;
}

}  // namespace detail

/// q interlaces p: roots alpha of p and beta of q (with multiplicity, descending)
/// satisfy alpha_1 >= beta_1 >= alpha_2 >= beta_2 >= ... The zero polynomial
/// interlaces and is interlaced by every real-rooted polynomial.
inline bool interlaces(const IntPolynomial& q, const IntPolynomial& p) {
  detail::require_nonnegative(q, "interlaces");
  detail::require_nonnegative(p, "interlaces");
  if (!is_real_rooted(q) || !is_real_rooted(p)) return false;
  if (q.is_zero() || p.is_zero()) return true;
  const std::ptrdiff_t dp = p.degree(), dq = q.degree();
  if (dp != dq && dp != dq + 1) return false;
  if (dp == 0) return true;

  // Distinct roots of p*q, indexed from the largest (index 0) downward.
  IntPolynomial sf = squarefree_part(p * q);
  std::vector<RootInterval> roots = detail::isolate_roots(sf);
  std::reverse(roots.begin(), roots.end());

  std::vector<std::size_t> alpha, beta;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    alpha.insert(alpha.end(), detail::multiplicity(p, sf, roots[k]), k);
    beta.insert(beta.end(), detail::multiplicity(q, sf, roots[k]), k);
  }
  if (alpha.size() != static_cast<std::size_t>(dp) || beta.size() != static_cast<std::size_t>(dq))
    throw std::logic_error("interlaces: root multiplicities do not account for the degree");

  // Larger root <=> smaller index.
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (alpha[k] > beta[k]) return false;
    if (k + 1 < alpha.size() && beta[k] > alpha[k + 1]) return false;
  }
  return true;
}

inline bool is_interlacing_sequence(std::span<const IntPolynomial> fs) {
  for (const auto& f : fs)
    if (!f.is_zero() && !is_real_rooted(f)) return false;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i; j < fs.size(); ++j)
      if (!interlaces(fs[i], fs[j])) return false;
  return true;
}

namespace detail {
/// prefix[k] = fs[0] + ... + fs[k-1], clamped to fs.size().
inline std::vector<IntPolynomial> prefix_sums(std::span<const IntPolynomial> fs) {
  std::vector<IntPolynomial> prefix(fs.size() + 1);
  for (std::size_t k = 0; k < fs.size(); ++k) prefix[k + 1] = prefix[k] + fs[k];
  return prefix;
}
}  // namespace detail

/// g_i = z * sum_{j < phi(i)} f_j + sum_{j >= phi(i)} f_j, for i over phi's domain.
inline std::vector<IntPolynomial> strict_transform(std::span<const IntPolynomial> fs,
                                                   std::span<const std::size_t> phi) {
  if (fs.empty()) throw std::invalid_argument("strict_transform: empty input sequence");
  for (std::size_t i = 1; i < phi.size(); ++i)
    if (phi[i] < phi[i - 1]) throw std::invalid_argument("strict_transform: phi is not weakly increasing");
  auto prefix = detail::prefix_sums(fs);
  const IntPolynomial& total = prefix.back();
  std::vector<IntPolynomial> g;
  g.reserve(phi.size());
  for (std::size_t k : phi) {
    const IntPolynomial& below = prefix[std::min(k, fs.size())];
    g.push_back(below.shifted(1) + (total - below));
  }
  return g;
}

/// g_i = z * sum_{j <= phi(i)} f_j + sum_{j >= phi(i)} f_j; f_{phi(i)} enters both sums.
inline std::vector<IntPolynomial> overlap_transform(std::span<const IntPolynomial> fs,
                                                    std::span<const std::size_t> phi) {
  if (fs.empty()) throw std::invalid_argument("overlap_transform: empty input sequence");
  auto prefix = detail::prefix_sums(fs);
  const IntPolynomial& total = prefix.back();
  std::vector<IntPolynomial> g;
  g.reserve(phi.size());
  for (std::size_t k : phi) {
    const IntPolynomial& upto = prefix[std::min(k + 1, fs.size())];
    const IntPolynomial& below = prefix[std::min(k, fs.size())];
    g.push_back(upto.shifted(1) + (total - below));
  }
  return g;
}

/// Sum of an interlacing sequence with nonnegative coefficients; verified, not assumed.
inline bool nonneg_sum_real_rooted(std::span<const IntPolynomial> fs) {
  for (const auto& f : fs) detail::require_nonnegative(f, "nonneg_sum_real_rooted");
  if (!is_interlacing_sequence(fs))
    throw std::invalid_argument("nonneg_sum_real_rooted: input is not an interlacing sequence");
  IntPolynomial sum;
  for (const auto& f : fs) sum += f;
  return is_real_rooted(sum);
}

}  // namespace hstar
