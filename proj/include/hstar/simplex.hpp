#pragma once

// h* and local h* of the simplex conv(e_1, ..., e_n, -sum q_i e_i).
//
// Every lattice point of the half-open fundamental parallelepiped is indexed
// by b in [0, Q) with height omega(b) = b - sum floor(q_i b / Q); the point
// lies in the open parallelepiped iff b > 0 and Q does not divide any q_i b.
// oracle_enumerate() checks this independently by scanning a bounding box and
// solving for barycentric coordinates with Cramer's rule.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hstar/integer.hpp"
#include "hstar/parallel.hpp"
#include "hstar/poly.hpp"

namespace hstar {

class WeightVector {
 public:
  explicit WeightVector(std::vector<Integer> q) : q_(std::move(q)) {
    if (q_.empty()) throw std::invalid_argument("WeightVector: empty weight list");
    for (std::size_t i = 0; i < q_.size(); ++i)
      if (q_[i] < 1)
        throw std::invalid_argument("WeightVector: weight q_" + std::to_string(i + 1) + " = " +
                                    q_[i].str() + " is not positive");
  }

  WeightVector(std::initializer_list<Integer> q) : WeightVector(std::vector<Integer>(q)) {}

  std::size_t dimension() const noexcept { return q_.size(); }
  std::span<const Integer> weights() const noexcept { return q_; }
  const Integer& operator[](std::size_t i) const { return q_.at(i); }

  Integer normalized_volume() const {
    Integer s = 1;
    for (const auto& x : q_) s += x;
    return s;
  }

  /// Weakly increasing copy, for display.
  WeightVector sorted() const {
    auto v = q_;
    std::sort(v.begin(), v.end());
    return WeightVector(std::move(v));
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Integer> q_;
};

inline Integer normalized_volume(const WeightVector& q) { return q.normalized_volume(); }

struct ScanLimits {
  /// Largest Q for which [0, Q) is scanned point by point.
  Integer max_volume = 100'000'000;
};

struct OracleLimits {
  /// Largest number of bounding-box points the oracle will visit.
  Integer max_box = 200'000'000;
};

inline std::size_t omega(const WeightVector& q, const Integer& b) {
  const Integer Q = q.normalized_volume();
  if (b < 0 || b >= Q)
    throw std::out_of_range("omega: b = " + b.str() + " outside [0, " + Q.str() + ")");
  Integer h = b;
  for (const auto& w : q.weights()) h -= (w * b) / Q;
  return h.convert_to<std::size_t>();
}

struct ParallelepipedPoint {
  Integer b;
  std::size_t height = 0;
  bool in_open = false;
};

inline ParallelepipedPoint parallelepiped_point(const WeightVector& q, const Integer& b) {
  const Integer Q = q.normalized_volume();
  ParallelepipedPoint pt{b, omega(q, b), b > 0};
  for (const auto& w : q.weights())
    if ((w * b) % Q == 0) pt.in_open = false;
  return pt;
}

/// Height distribution over the half-open and open parallelepipeds.
struct HeightTally {
  std::vector<Integer> all;   // index = height
  std::vector<Integer> open;  // index = height
  Integer open_count = 0;
};

namespace detail {

struct ChunkTally {
  std::vector<std::uint64_t> all;
  std::vector<std::uint64_t> open;
};

inline void require_scan_volume(const Integer& Q, const ScanLimits& limits) {
  if (Q > limits.max_volume) throw ScaleGuardError("max-volume", Q, limits.max_volume);
}

/// Scan specialised to a machine integer type; products are formed in Wide.
template <typename Int, typename Wide>
HeightTally scan_heights_as(const WeightVector& q, unsigned workers = worker_count()) {
  const std::size_t n = q.dimension();
  const Int Q = static_cast<Int>(q.normalized_volume());
  std::vector<Int> w;
  for (const auto& x : q.weights()) w.push_back(static_cast<Int>(x));

  auto chunks = parallel_chunks<ChunkTally>(static_cast<std::uint64_t>(Q), [&](std::uint64_t lo, std::uint64_t hi) {
    ChunkTally t{std::vector<std::uint64_t>(n + 1), std::vector<std::uint64_t>(n + 1)};
    for (std::uint64_t bb = lo; bb < hi; ++bb) {
      const Int b = static_cast<Int>(bb);
      Int h = b;
      bool open = b > 0;
      for (const Int wi : w) {
        const Wide prod = static_cast<Wide>(wi) * static_cast<Wide>(b);
        const Wide quot = prod / static_cast<Wide>(Q);
        h -= static_cast<Int>(quot);
        if (quot * static_cast<Wide>(Q) == prod) open = false;
      }
      const auto hi_idx = static_cast<std::size_t>(h);
      ++t.all[hi_idx];
      if (open) ++t.open[hi_idx];
    }
    return t;
  }, workers);

  HeightTally out{std::vector<Integer>(n + 1), std::vector<Integer>(n + 1), 0};
  for (const auto& c : chunks)
    for (std::size_t k = 0; k <= n; ++k) {
      out.all[k] += c.all[k];
      out.open[k] += c.open[k];
      out.open_count += c.open[k];
    }
  return out;
}

/// Arbitrary-precision reference scan.
inline HeightTally scan_heights_big(const WeightVector& q) {
  const std::size_t n = q.dimension();
  const Integer Q = q.normalized_volume();
  HeightTally out{std::vector<Integer>(n + 1), std::vector<Integer>(n + 1), 0};
  for (Integer b = 0; b < Q; ++b) {
    auto pt = parallelepiped_point(q, b);
    ++out.all[pt.height];
    if (pt.in_open) {
      ++out.open[pt.height];
      ++out.open_count;
    }
  }
  return out;
}

}  // namespace detail

inline HeightTally height_tally(const WeightVector& q, const ScanLimits& limits = {}) {
  const Integer Q = q.normalized_volume();
  detail::require_scan_volume(Q, limits);
  if (Q <= std::numeric_limits<std::int64_t>::max())
    return detail::scan_heights_as<std::int64_t, __int128>(q);
  return detail::scan_heights_big(q);
}

inline std::vector<Integer> t_set(const WeightVector& q, const ScanLimits& limits = {}) {
  const Integer Q = q.normalized_volume();
  detail::require_scan_volume(Q, limits);
  std::vector<Integer> out;
  for (Integer b = 1; b < Q; ++b) {
    bool keep = true;
    for (const auto& w : q.weights())
      if ((w * b) % Q == 0) {
        keep = false;
        break;
      }
    if (keep) out.push_back(b);
  }
  return out;
}

inline IntPolynomial local_hstar(const WeightVector& q, const ScanLimits& limits = {}) {
  return IntPolynomial(height_tally(q, limits).open);
}

inline IntPolynomial hstar(const WeightVector& q, const ScanLimits& limits = {}) {
  return IntPolynomial(height_tally(q, limits).all);
}

/// Columns (v1,1), ..., (vn,1), (v0,1) with the all-ones row first.
struct VertexMatrix {
  std::vector<std::vector<Integer>> entries;  // row-major, (n+1) x (n+1)

  std::size_t size() const noexcept { return entries.size(); }
  Integer determinant() const;
  /// adj(M) with M * adj(M) = det(M) * I.
  std::vector<std::vector<Integer>> adjugate() const;
};

namespace detail {

/// Fraction-free Gaussian elimination.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace detail

inline Integer VertexMatrix::determinant() const { return detail::bareiss_determinant(entries); }

inline std::vector<std::vector<Integer>> VertexMatrix::adjugate() const {
  const std::size_t n = entries.size();
  std::vector<std::vector<Integer>> adj(n, std::vector<Integer>(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Integer>> minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<Integer> row;
        for (std::size_t j = 0; j < n; ++j)
          if (j != c) row.push_back(entries[i][j]);
        minor.push_back(std::move(row));
      }
      Integer cof = detail::bareiss_determinant(std::move(minor));
      if ((r + c) % 2) cof = -cof;
      adj[c][r] = cof;  // transpose of the cofactor matrix
    }
  return adj;
}

inline VertexMatrix vertex_matrix(const WeightVector& q) {
  const std::size_t n = q.dimension();
  VertexMatrix m;
  m.entries.assign(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  for (std::size_t c = 0; c <= n; ++c) m.entries[0][c] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    m.entries[i][i - 1] = 1;
    m.entries[i][n] = -q[i - 1];
  }
  if (abs(m.determinant()) != q.normalized_volume())
    throw std::logic_error("vertex_matrix: |det| differs from the normalized volume");
  return m;
}

/// Height -> number of lattice points in the open (open_only) or half-open
/// parallelepiped, found by scanning the generators' bounding box and solving
/// M * lambda = x exactly. The height is the coordinate on the all-ones row.
inline std::map<std::size_t, Integer> oracle_enumerate(const WeightVector& q, bool open_only,
                                                       const OracleLimits& limits = {}) {
  const VertexMatrix m = vertex_matrix(q);
  const std::size_t dim = m.size();

  std::vector<Integer> lo(dim, Integer(0)), hi(dim, Integer(0));
  Integer box = 1;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Integer& e = m.entries[r][c];
      if (e.sign() < 0) lo[r] += e;
      else hi[r] += e;
    }
    box *= hi[r] - lo[r] + 1;
  }
  if (box > limits.max_box) throw ScaleGuardError("max-box", box, limits.max_box);

  Integer det = m.determinant();
  auto adj = m.adjugate();
  if (det.sign() < 0) {
    det = -det;
    for (auto& row : adj)
      for (auto& x : row) x = -x;
  }
  for (const auto& row : adj)
    for (const auto& x : row)
      if (!fits_int64(x)) throw ScaleGuardError("adjugate-entry", abs(x), std::numeric_limits<std::int64_t>::max());

  using Wide = __int128;
  const auto D = static_cast<Wide>(static_cast<std::int64_t>(det));
  std::vector<std::int64_t> lo64(dim), extent(dim);
  std::vector<std::vector<Wide>> col(dim, std::vector<Wide>(dim));  // col[axis][component]
  for (std::size_t r = 0; r < dim; ++r) {
    lo64[r] = static_cast<std::int64_t>(lo[r]);
    extent[r] = static_cast<std::int64_t>(hi[r] - lo[r] + 1);
  }
  for (std::size_t comp = 0; comp < dim; ++comp)
    for (std::size_t axis = 0; axis < dim; ++axis)
      col[axis][comp] = static_cast<std::int64_t>(adj[comp][axis]);

  const std::uint64_t total = static_cast<std::uint64_t>(box);
  using Tally = std::vector<std::uint64_t>;
  auto chunks = parallel_chunks<Tally>(total, [&](std::uint64_t begin, std::uint64_t end) {
    Tally t(dim + 1, 0);
    if (begin >= end) return t;
    // Odometer over the box; the last axis varies fastest.
    std::vector<std::int64_t> idx(dim);
    std::uint64_t rest = begin;
    for (std::size_t r = dim; r-- > 0;) {
      idx[r] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(extent[r]));
      rest /= static_cast<std::uint64_t>(extent[r]);
    }
    std::vector<Wide> num(dim, 0);
    for (std::size_t axis = 0; axis < dim; ++axis) {
      const Wide x = lo64[axis] + idx[axis];
      for (std::size_t comp = 0; comp < dim; ++comp) num[comp] += col[axis][comp] * x;
    }
    for (std::uint64_t k = begin; k < end; ++k) {
      bool inside = true;
      for (std::size_t comp = 0; comp < dim && inside; ++comp) {
        const Wide v = num[comp];
        inside = open_only ? (v > 0 && v < D) : (v >= 0 && v < D);
      }
      if (inside) {
        const std::int64_t height = lo64[0] + idx[0];
        if (height < 0 || static_cast<std::size_t>(height) > dim)
          throw std::logic_error("oracle_enumerate: height outside [0, n+1]");
        ++t[static_cast<std::size_t>(height)];
      }
      // advance
      for (std::size_t axis = dim; axis-- > 0;) {
        if (++idx[axis] < extent[axis]) {
          for (std::size_t comp = 0; comp < dim; ++comp) num[comp] += col[axis][comp];
          break;
        }
        idx[axis] = 0;
        for (std::size_t comp = 0; comp < dim; ++comp) num[comp] -= col[axis][comp] * (extent[axis] - 1);
      }
    }
    return t;
  });

  std::map<std::size_t, Integer> out;
  for (const auto& t : chunks)
    for (std::size_t h = 0; h < t.size(); ++h)
      if (t[h]) out[h] += t[h];
  return out;
}

/// Coefficient map of p, zero coefficients omitted; comparable with oracle_enumerate.
inline std::map<std::size_t, Integer> coefficient_map(const IntPolynomial& p) {
  std::map<std::size_t, Integer> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.coeff(i).is_zero()) out[i] = p.coeff(i);
  return out;
}

}  // namespace hstar
