#pragma once

#include <cstdint>

#include "hqcf/types.hpp"

namespace hqcf {

// Arithmetic context for F_p with p an odd prime below 2^31.  All element
// operations assume canonical residues in [0, p); products then fit in
// 64 bits without overflow.
class Fp {
 public:
  explicit Fp(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  Fe add(Fe a, Fe b) const {
    Fe s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fe sub(Fe a, Fe b) const { return a >= b ? a - b : a + (p_ - b); }
  Fe neg(Fe a) const { return a == 0 ? 0 : p_ - a; }
  Fe mul(Fe a, Fe b) const { return (a * b) % p_; }
  Fe pow(Fe a, std::uint64_t e) const;
  // Fermat inversion; a must be nonzero.
  Fe inv(Fe a) const;

  Fe from_int(long long v) const;
  // num/den reduced mod p; den must not vanish mod p.
  Fe from_ratio(long long num, long long den) const;

  bool operator==(const Fp&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace hqcf
