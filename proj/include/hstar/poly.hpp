#pragma once

// Dense univariate polynomials with exact integer coefficients, plus the
// distributional predicates (symmetry, unimodality, log-concavity) and the
// gamma-basis expansion used on every h* / local h* polynomial.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hstar/integer.hpp"

namespace hstar {

/// Degree reported for the zero polynomial.
inline constexpr std::ptrdiff_t kMinusInfinity = std::numeric_limits<std::ptrdiff_t>::min();

class IntPolynomial {
 public:
  IntPolynomial() = default;

  /// coeffs[i] is the coefficient of z^i.
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  IntPolynomial(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) { normalize(); }

  static IntPolynomial constant(Integer c) { return IntPolynomial(std::vector<Integer>{std::move(c)}); }

  /// c * z^k
  static IntPolynomial monomial(Integer c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  static IntPolynomial z() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::ptrdiff_t degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  /// Index of the lowest nonzero coefficient; kMinusInfinity for zero.
  std::ptrdiff_t low_degree() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return static_cast<std::ptrdiff_t>(i);
    return kMinusInfinity;
  }

  /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
  std::size_t size() const noexcept { return coeffs_.size(); }

  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  const Integer& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool has_nonnegative_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.sign() >= 0; });
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  IntPolynomial& operator*=(const Integer& c) {
    if (c.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& x : a.coeffs_) x = -x;
    return a;
  }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend IntPolynomial operator*(const Integer& c, IntPolynomial a) { return a *= c; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }

  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiply by z^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> v(k, Integer(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
  }

  /// p(z^s)
  IntPolynomial substitute_power(std::size_t s) const {
    if (s == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
    if (is_zero()) return {};
    std::vector<Integer> v((coeffs_.size() - 1) * s + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * s] = coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * i;
    return IntPolynomial(std::move(v));
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Sign of p(num/den) for den > 0, evaluated without leaving the integers.
  int sign_at(const Integer& num, const Integer& den) const {
    if (coeffs_.empty()) return 0;
    Integer acc = 0;
    Integer den_pow = 1;
    // Horner on the homogenized form sum c_i num^i den^(d-i).
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * num + *it * den_pow;
      den_pow *= den;
    }
    return acc.sign();
  }

  std::string to_string(char var = 'z') const;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c.is_zero()) continue;
    Integer mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

inline IntPolynomial pow(const IntPolynomial& base, long long exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial b = base;
  auto e = static_cast<unsigned long long>(exponent);
  while (e) {
    if (e & 1ULL) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

/// Sum of coefficients.
inline Integer eval_at_one(const IntPolynomial& p) {
  Integer s = 0;
  for (const auto& c : p.coeffs()) s += c;
  return s;
}

/// p_i == p_{m-i} for i in [0, m], and deg p <= m.
inline bool is_symmetric(const IntPolynomial& p, std::size_t m) {
  if (p.is_zero()) return true;
  if (p.degree() > static_cast<std::ptrdiff_t>(m)) return false;
  for (std::size_t i = 0; i <= m / 2; ++i)
    if (p.coeff(i) != p.coeff(m - i)) return false;
  return true;
}

namespace detail {
inline void require_nonnegative(const IntPolynomial& p, const char* what) {
  if (!p.has_nonnegative_coefficients())
    throw std::invalid_argument(std::string(what) + ": polynomial has a negative coefficient");
}
}  // namespace detail

inline bool is_unimodal(const IntPolynomial& p) {
  detail::require_nonnegative(p, "is_unimodal");
  auto c = p.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

inline bool is_log_concave(const IntPolynomial& p) {
  detail::require_nonnegative(p, "is_log_concave");
  auto c = p.coeffs();
  for (std::size_t i = 1; i + 1 < c.size(); ++i)
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  return true;
}

/// Coordinates of a polynomial symmetric about `center` in the basis
/// z^i (1+z)^(center-2i), i = 0..floor(center/2).
struct GammaVector {
  std::vector<Integer> gammas;
  std::size_t center = 0;

  IntPolynomial reconstruct() const {
    IntPolynomial sum;
    const IntPolynomial one_plus_z{1, 1};
    for (std::size_t i = 0; i < gammas.size(); ++i) {
      if (gammas[i].is_zero()) continue;
      sum += (pow(one_plus_z, static_cast<long long>(center - 2 * i)) * gammas[i]).shifted(i);
    }
    return sum;
  }

  bool nonnegative() const {
    return std::all_of(gammas.begin(), gammas.end(), [](const Integer& g) { return g.sign() >= 0; });
  }

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

inline GammaVector gamma_expansion(const IntPolynomial& p, std::size_t m) {
  if (p.degree() > static_cast<std::ptrdiff_t>(m))
    throw std::invalid_argument("gamma_expansion: degree " + std::to_string(p.degree()) +
                                " exceeds center " + std::to_string(m));
  for (std::size_t i = 0; i <= m / 2; ++i) {
    if (p.coeff(i) != p.coeff(m - i))
      throw std::invalid_argument("gamma_expansion: not symmetric about " + std::to_string(m) +
                                  ", first mismatch at pair (" + std::to_string(i) + ", " +
                                  std::to_string(m - i) + "): " + p.coeff(i).str() +
                                  " != " + p.coeff(m - i).str());
  }
  GammaVector out;
  out.center = m;
  out.gammas.resize(m / 2 + 1);
  IntPolynomial rest = p;
  const IntPolynomial one_plus_z{1, 1};
  for (std::size_t i = 0; i <= m / 2; ++i) {
    // The basis element z^i (1+z)^(m-2i) is the only remaining one with a z^i term.
    Integer g = rest.coeff(i);
    out.gammas[i] = g;
    if (!g.is_zero()) rest -= (pow(one_plus_z, static_cast<long long>(m - 2 * i)) * g).shifted(i);
  }
  if (!rest.is_zero())
    throw std::logic_error("gamma_expansion: nonzero remainder " + rest.to_string());
  return out;
}

/// Returns (f^(0), ..., f^(s-1)) with f(z) = sum_l z^l f^(l)(z^s).
inline std::vector<IntPolynomial> congruence_sections(const IntPolynomial& f, std::size_t s) {
  if (s == 0) throw std::invalid_argument("congruence_sections: s must be positive");
  std::vector<std::vector<Integer>> parts(s);
  auto c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto& part = parts[i % s];
    part.resize(i / s + 1);
    part[i / s] = c[i];
  }
  std::vector<IntPolynomial> out;
  out.reserve(s);
  for (auto& part : parts) out.emplace_back(std::move(part));
  return out;
}

/// Inverse of congruence_sections.
inline IntPolynomial reassemble_sections(std::span<const IntPolynomial> sections) {
  IntPolynomial f;
  const std::size_t s = sections.size();
  for (std::size_t l = 0; l < s; ++l) f += sections[l].substitute_power(s).shifted(l);
  return f;
}

}  // namespace hstar
