#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hstar {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a brute-force scan would exceed its configured size bound.
class ScaleGuardError : public std::runtime_error {
 public:
  ScaleGuardError(std::string bound, const Integer& requested, const Integer& limit)
      : std::runtime_error("scale guard '" + bound + "' exceeded: requested " +
                           requested.str() + ", limit " + limit.str()),
        bound_(std::move(bound)),
        requested_(requested),
        limit_(limit) {}

  const std::string& bound() const noexcept { return bound_; }
  const Integer& requested() const noexcept { return requested_; }
  const Integer& limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  Integer requested_;
  Integer limit_;
};

inline Integer factorial(std::uint64_t n) {
  Integer f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= k;
  return f;
}

inline int sign(const Integer& x) { return x.sign(); }

inline bool fits_int64(const Integer& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace hstar
