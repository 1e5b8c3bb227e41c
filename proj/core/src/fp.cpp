#include "hqcf/fp.hpp"

#include <string>

namespace hqcf {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Fp::Fp(std::uint64_t p) : p_(p) {
  if (p < 3 || p % 2 == 0 || p >= (1ull << 31) || !is_prime(p))
    throw domain_error("Fp: modulus must be an odd prime below 2^31, got " +
                       std::to_string(p));
}

Fe Fp::pow(Fe a, std::uint64_t e) const {
  Fe r = 1 % p_;
  Fe b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Fe Fp::inv(Fe a) const {
  if (a == 0) throw domain_error("Fp::inv: zero is not invertible");
  return pow(a, p_ - 2);
}

Fe Fp::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += static_cast<long long>(p_);
  return static_cast<Fe>(m);
}

Fe Fp::from_ratio(long long num, long long den) const {
  Fe d = from_int(den);
  if (d == 0)
    throw domain_error("Fp::from_ratio: denominator vanishes mod p");
  return mul(from_int(num), inv(d));
}

}  // namespace hqcf
