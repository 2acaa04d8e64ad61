#pragma once

// Positional numeral systems, Lehmer codes and descent statistics, and the
// factoradic simplex family: weights from the maxDes polynomial, its local h*
// polynomial by direct enumeration and by the refined-row recursion.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstar/integer.hpp"
#include "hstar/parallel.hpp"
#include "hstar/poly.hpp"
#include "hstar/realroot.hpp"
#include "hstar/simplex.hpp"

namespace hstar {

class NumeralSystem {
 public:
  enum class Family { binary, base_r, factoradic, explicit_list };

  static NumeralSystem binary() { return NumeralSystem(Family::binary, 2, {}); }

  static NumeralSystem base(unsigned r) {
    if (r < 2) throw std::invalid_argument("NumeralSystem::base: r must be at least 2");
    return NumeralSystem(r == 2 ? Family::binary : Family::base_r, r, {});
  }

  /// Place values (k+1)!.
  static NumeralSystem factoradic() { return NumeralSystem(Family::factoradic, 0, {}); }

  static NumeralSystem from_places(std::vector<Integer> places) {
    if (places.empty() || places.front() != 1)
      throw std::invalid_argument("NumeralSystem: first place value must be 1");
    for (std::size_t k = 1; k < places.size(); ++k)
      if (places[k] <= places[k - 1])
        throw std::invalid_argument("NumeralSystem: place values must be strictly increasing");
    return NumeralSystem(Family::explicit_list, 0, std::move(places));
  }

  Family family() const noexcept { return family_; }

  Integer place_value(std::size_t k) const {
    switch (family_) {
      case Family::binary:
      case Family::base_r: return boost::multiprecision::pow(Integer(radix_), static_cast<unsigned>(k));
      case Family::factoradic: return factorial(k + 1);
      case Family::explicit_list:
        if (k >= places_.size())
          throw std::out_of_range("NumeralSystem: place " + std::to_string(k) + " beyond the explicit list");
        return places_[k];
    }
    throw std::logic_error("NumeralSystem: unknown family");
  }

  /// Number of listed places, or nullopt for the unbounded families.
  std::optional<std::size_t> place_count() const {
    if (family_ == Family::explicit_list) return places_.size();
    return std::nullopt;
  }

  friend bool operator==(const NumeralSystem&, const NumeralSystem&) = default;

 private:
  NumeralSystem(Family f, unsigned r, std::vector<Integer> places)
      : family_(f), radix_(r), places_(std::move(places)) {}

  Family family_;
  unsigned radix_;
  std::vector<Integer> places_;
};

struct Numeral {
  /// Most significant first; digits[i] sits at place digits.size() - 1 - i.
  std::vector<Integer> digits;
  NumeralSystem system;
};

/// Greedy representation; the empty digit string represents 0.
inline Numeral to_numeral(const Integer& b, const NumeralSystem& sys) {
  if (b < 0) throw std::invalid_argument("to_numeral: negative value");
  Numeral out{{}, sys};
  if (b.is_zero()) return out;
  std::size_t top = 0;
  while (true) {
    if (auto cnt = sys.place_count(); cnt && top + 1 >= *cnt) break;
    if (sys.place_value(top + 1) > b) break;
    ++top;
  }
  Integer rest = b;
  for (std::size_t k = top + 1; k-- > 0;) {
    Integer a = sys.place_value(k);
    out.digits.push_back(rest / a);
    rest %= a;
  }
  return out;
}

inline Integer from_numeral(const Numeral& num) {
  const std::size_t m = num.digits.size();
  Integer value = 0;
  // Scan from the least significant place so each prefix sum can be checked
  // against the next place value.
  for (std::size_t k = 0; k < m; ++k) {
    const Integer& d = num.digits[m - 1 - k];
    if (d < 0) throw std::invalid_argument("from_numeral: negative digit");
    value += d * num.system.place_value(k);
    bool has_next = !num.system.place_count() || k + 1 < *num.system.place_count();
    if (has_next && value >= num.system.place_value(k + 1))
      throw std::invalid_argument("from_numeral: digit " + d.str() + " at place " + std::to_string(k) +
                                  " out of bounds");
  }
  return value;
}

class Permutation {
 public:
  /// One-line notation over 1..n.
  explicit Permutation(std::vector<unsigned> one_line) : p_(std::move(one_line)) {
    std::vector<bool> seen(p_.size() + 1, false);
    for (unsigned v : p_) {
      if (v < 1 || v > p_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection on [n]");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<unsigned> v(n);
    std::iota(v.begin(), v.end(), 1u);
    return Permutation(std::move(v));
  }

  std::size_t size() const noexcept { return p_.size(); }
  /// 1-based access, pi_i.
  unsigned operator()(std::size_t i) const { return p_.at(i - 1); }
  std::span<const unsigned> one_line() const noexcept { return p_; }

  std::string to_string() const {
    std::string s;
    for (unsigned v : p_) {
      if (!s.empty() && p_.size() > 9) s += ' ';
      s += std::to_string(v);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> p_;
};

class LehmerCode {
 public:
  /// entries = (l_{n-1}, ..., l_1), each l_k in [0, k].
  explicit LehmerCode(std::vector<unsigned> entries) : e_(std::move(entries)) {
    const std::size_t n = e_.size() + 1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      const std::size_t k = n - 1 - i;
      if (e_[i] > k)
        throw std::invalid_argument("LehmerCode: entry l_" + std::to_string(k) + " = " + std::to_string(e_[i]) +
                                    " exceeds " + std::to_string(k));
    }
  }

  static LehmerCode zeros(std::size_t n) { return LehmerCode(std::vector<unsigned>(n ? n - 1 : 0, 0)); }

  /// Permutation size n.
  std::size_t n() const noexcept { return e_.size() + 1; }
  /// l_k for k in [0, n-1]; l_0 = 0.
  unsigned at(std::size_t k) const {
    if (k == 0) return 0;
    if (k >= n()) throw std::out_of_range("LehmerCode::at");
    return e_[n() - 1 - k];
  }
  std::span<const unsigned> entries() const noexcept { return e_; }

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<unsigned> e_;
};

inline LehmerCode lehmer_code(const Permutation& p) {
  const std::size_t n = p.size();
  if (n == 0) return LehmerCode({});
  std::vector<unsigned> e;
  for (std::size_t i = n - 1; i >= 1; --i) {
    unsigned cnt = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (p(n - i) > p(n - j)) ++cnt;
    e.push_back(cnt);
  }
  return LehmerCode(std::move(e));
}

inline Permutation permutation_from_lehmer(const LehmerCode& code) {
  const std::size_t n = code.n();
  std::vector<unsigned> s(n);
  std::iota(s.begin(), s.end(), 1u);
  std::vector<unsigned> pi;
  pi.reserve(n);
  for (std::size_t k = 1; k < n; ++k) {
    const unsigned l = code.at(n - k);
    pi.push_back(s[l]);
    s.erase(s.begin() + l);
  }
  pi.push_back(s.front());
  return Permutation(std::move(pi));
}

/// Permutation of [n] whose Lehmer code is the factoradic numeral of b,
/// zero-padded to n-1 digits. b = 0 gives the identity, b = n!-1 gives n...21.
inline Permutation unrank_lex(const Integer& b, std::size_t n) {
  if (n == 0) throw std::invalid_argument("unrank_lex: n must be positive");
  if (b < 0 || b >= factorial(n))
    throw std::out_of_range("unrank_lex: b = " + b.str() + " outside [0, " + std::to_string(n) + "!)");
  Numeral num = to_numeral(b, NumeralSystem::factoradic());
  std::vector<unsigned> e(n - 1 - num.digits.size(), 0);
  for (const auto& d : num.digits) e.push_back(d.convert_to<unsigned>());
  return permutation_from_lehmer(LehmerCode(std::move(e)));
}

namespace detail {
/// Machine-word unranking for the enumeration scans; n <= 20.
inline void unrank_lex_u64(std::uint64_t b, std::size_t n, std::vector<unsigned>& pi) {
  unsigned s[21];
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<unsigned>(i + 1);
  std::uint64_t fact[21];
  fact[0] = 1;
  for (std::size_t i = 1; i < n; ++i) fact[i] = fact[i - 1] * i;
  pi.resize(n);
  std::size_t len = n;
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t place = n - k;  // l_{n-k} multiplies (n-k)!
    const auto l = static_cast<std::size_t>(b / fact[place]);
    b %= fact[place];
    pi[k - 1] = s[l];
    for (std::size_t j = l; j + 1 < len; ++j) s[j] = s[j + 1];
    --len;
  }
  pi[n - 1] = s[0];
}

inline std::size_t des_one_line(std::span<const unsigned> p) {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) ++d;
  return d;
}
}  // namespace detail

inline std::size_t des(const Permutation& p) { return detail::des_one_line(p.one_line()); }

/// Largest descent position, 0 when there is none.
inline std::size_t maxdes(const Permutation& p) {
  std::size_t m = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) m = i;
  return m;
}

inline std::size_t des_lehmer(const LehmerCode& code) {
  std::size_t d = 0;
  for (std::size_t i = 1; i < code.n(); ++i)
    if (code.at(i) > code.at(i - 1)) ++d;
  return d;
}

struct EnumerationLimits {
  /// Largest n for which S_n is enumerated.
  std::size_t max_symmetric_n = 9;
  /// Largest (n+1)! scanned by the factoradic enumeration.
  Integer max_factoradic_range = 40'000'000;
  std::size_t max_factoradic_n = 9;
  /// Largest n for the 2^n base-2 scan.
  std::size_t max_binary_n = 26;
};

namespace detail {
template <typename Stat>
IntPolynomial permutation_statistic_poly(std::size_t n, const EnumerationLimits& limits, Stat stat) {
  if (n == 0) throw std::invalid_argument("permutation enumeration: n must be positive");
  if (n > limits.max_symmetric_n) throw ScaleGuardError("max-symmetric-n", n, limits.max_symmetric_n);
  std::vector<Integer> c(n);
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do {
    ++c[stat(Permutation(v))];
  } while (std::next_permutation(v.begin(), v.end()));
  return IntPolynomial(std::move(c));
}
}  // namespace detail

/// A_n(z) by enumeration of S_n.
inline IntPolynomial eulerian(std::size_t n, const EnumerationLimits& limits = {}) {
  return detail::permutation_statistic_poly(n, limits, [](const Permutation& p) { return des(p); });
}

/// A_n(z) from the triangle A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1); no size limit.
inline IntPolynomial eulerian_by_recurrence(std::size_t n) {
  if (n == 0) throw std::invalid_argument("eulerian_by_recurrence: n must be positive");
  std::vector<Integer> row{1};
  for (std::size_t m = 2; m <= n; ++m) {
    std::vector<Integer> next(m);
    for (std::size_t k = 0; k < m; ++k) {
      if (k < row.size()) next[k] += row[k] * (k + 1);
      if (k >= 1) next[k] += row[k - 1] * (m - k);
    }
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

/// B_n(z) from b_{n,0} = 1, b_{n,k} = n!/(n-k)! - n!/(n-k+1)!.
inline IntPolynomial maxdes_poly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("maxdes_poly: n must be positive");
  const Integer nf = factorial(n);
  std::vector<Integer> c(n);
  c[0] = 1;
  for (std::size_t k = 1; k < n; ++k) c[k] = nf / factorial(n - k) - nf / factorial(n - k + 1);
  return IntPolynomial(std::move(c));
}

inline IntPolynomial maxdes_poly_enum(std::size_t n, const EnumerationLimits& limits = {}) {
  return detail::permutation_statistic_poly(n, limits, [](const Permutation& p) { return maxdes(p); });
}

/// Nonconstant coefficients of B_{n+1}; normalized volume (n+1)!.
inline WeightVector factoradic_weights(std::size_t n) {
  IntPolynomial b = maxdes_poly(n + 1);
  return WeightVector(std::vector<Integer>(b.coeffs().begin() + 1, b.coeffs().end()));
}

/// sum of z^des(pi^(b)) over 0 < b < (n+1)! with b = 1 or 5 mod 6.
inline IntPolynomial factoradic_local_hstar_enum(std::size_t n, const EnumerationLimits& limits = {}) {
  if (n == 0) throw std::invalid_argument("factoradic_local_hstar_enum: n must be positive");
  if (n > limits.max_factoradic_n) throw ScaleGuardError("max-factoradic-n", n, limits.max_factoradic_n);
  const Integer range = factorial(n + 1);
  if (range > limits.max_factoradic_range)
    throw ScaleGuardError("max-factoradic-range", range, limits.max_factoradic_range);
  const std::size_t size = n + 1;
  using Tally = std::vector<std::uint64_t>;
  auto chunks = parallel_chunks<Tally>(static_cast<std::uint64_t>(range), [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t(size, 0);
    std::vector<unsigned> pi;
    for (std::uint64_t b = lo; b < hi; ++b) {
      const auto r = b % 6;
      if (r != 1 && r != 5) continue;
      detail::unrank_lex_u64(b, size, pi);
      ++t[detail::des_one_line(pi)];
    }
    return t;
  });
  std::vector<Integer> c(size);
  for (const auto& t : chunks)
    for (std::size_t k = 0; k < size; ++k) c[k] += t[k];
  return IntPolynomial(std::move(c));
}

/// Rows L_3, ..., L_{last} of the refined recursion: L_3 = (z, 0, z^2) and
/// L_{m,k} = z sum_{t<k} L_{m-1,t} + sum_{t>=k} L_{m-1,t}, k in [0, m-1].
inline std::vector<std::vector<IntPolynomial>> factoradic_recursion_rows(std::size_t last) {
  std::vector<std::vector<IntPolynomial>> rows;
  if (last < 3) return rows;
  rows.push_back({IntPolynomial::z(), IntPolynomial{}, IntPolynomial::monomial(1, 2)});
  for (std::size_t m = 4; m <= last; ++m) {
    std::vector<std::size_t> phi(m);
    std::iota(phi.begin(), phi.end(), std::size_t{0});
    rows.push_back(strict_transform(rows.back(), phi));
  }
  return rows;
}

/// Local h* of the factoradic n-simplex via the row recursion (sum of L_{n+1}).
inline IntPolynomial factoradic_local_hstar_recursive(std::size_t n) {
  if (n == 0) throw std::invalid_argument("factoradic_local_hstar_recursive: n must be positive");
  if (n == 1) return IntPolynomial::z();
  auto rows = factoradic_recursion_rows(n + 1);
  IntPolynomial sum;
  for (const auto& p : rows.back()) sum += p;
  return sum;
}

/// Local h* polynomials for n = 1..count, sharing one pass of the recursion.
inline std::vector<IntPolynomial> factoradic_triangle(std::size_t count) {
  std::vector<IntPolynomial> out;
  if (count >= 1) out.push_back(IntPolynomial::z());
  if (count >= 2) {
    auto rows = factoradic_recursion_rows(count + 1);
    for (const auto& row : rows) {
      IntPolynomial sum;
      for (const auto& p : row) sum += p;
      out.push_back(std::move(sum));
    }
  }
  return out;
}

/// |{1 <= b < (n+1)! : b = 1 or 5 mod 6}|, counted arithmetically.
inline Integer count_mod6(std::size_t n) {
  if (n == 0) throw std::invalid_argument("count_mod6: n must be positive");
  const Integer top = factorial(n + 1) - 1;
  return (top + 5) / 6 + (top + 1) / 6;
}

/// Number of ones in the binary representation of b.
inline std::size_t supp2(const Integer& b) {
  if (b < 0) throw std::invalid_argument("supp2: negative value");
  std::size_t count = 0;
  Integer x = b;
  while (!x.is_zero()) {
    count += std::popcount(static_cast<std::uint64_t>(x & Integer(0xFFFFFFFFFFFFFFFFULL)));
    x >>= 64;
  }
  return count;
}

}  // namespace hstar
