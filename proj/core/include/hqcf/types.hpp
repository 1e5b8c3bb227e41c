#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace hqcf {

// A prime field element travels as a bare residue in [0, p); the prime
// itself lives in an Fp context value (see fp.hpp).
using Fe = std::uint64_t;

// Degrees and valuations share one signed type.  The zero polynomial and
// the zero series get a -infinity sentinel chosen so that comparisons
// stay total and a couple of additions cannot overflow.
using Deg = long long;
inline constexpr Deg kNegInfDeg = std::numeric_limits<Deg>::min() / 4;

inline constexpr bool deg_finite(Deg d) { return d > kNegInfDeg / 2; }

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Bad argument or operation outside the mathematical domain (division by
// zero, non p-power Frobenius exponent, ...).
struct domain_error : error {
  using error::error;
};
// A computation would have to consume a series coefficient outside the
// tracked precision window.  Never silently zero-filled.
struct precision_error : error {
  using error::error;
};
// An internal cross-check failed.  For the verification pipelines this is
// the "mathematical finding" channel: it means an identity the theory
// promises did not hold for the computed data.
struct invariant_error : error {
  using error::error;
};
// A configured resource cap (precision, iteration count) was exceeded.
struct resource_error : error {
  using error::error;
};

}  // namespace hqcf
