#include "hqcf/poly.hpp"

#include <algorithm>
#include <cassert>

namespace hqcf {

namespace {

// Accumulator guard for multiply-accumulate loops: summands are < 2^62
// (p < 2^31), so reducing whenever the accumulator reaches 2^63 keeps the
// next addition overflow-free.
constexpr std::uint64_t kAccGuard = 1ull << 63;

}  // namespace

Poly::Poly(const Fp& f, std::vector<Fe> ascending) : F_(f), c_(std::move(ascending)) {
  for (Fe& x : c_) {
    if (x >= F_.p())
      throw domain_error("Poly: coefficient not reduced mod p");
  }
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Fp& f, Fe c) {
  Poly r(f);
  if (c % f.p() != 0) r.c_.push_back(c % f.p());
  return r;
}

Poly Poly::monomial(const Fp& f, Fe c, std::size_t d) {
  Poly r(f);
  c %= f.p();
  if (c != 0) {
    r.c_.assign(d + 1, 0);
    r.c_[d] = c;
  }
  return r;
}

Fe Poly::lc() const {
  if (c_.empty()) throw domain_error("Poly::lc: zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(F_);
  r.c_.reserve(c_.size());
  for (Fe x : c_) r.c_.push_back(F_.neg(x));
  return r;
}

Poly Poly::scaled(Fe s) const {
  Poly r(F_);
  if (s == 0) return r;
  r.c_.reserve(c_.size());
  for (Fe x : c_) r.c_.push_back(F_.mul(x, s));
  r.normalize();
  return r;
}

Poly Poly::shifted(std::size_t d) const {
  if (c_.empty() || d == 0) {
    Poly r = *this;
    if (!c_.empty() && d != 0) r.c_.insert(r.c_.begin(), d, 0);
    return r;
  }
  Poly r(F_);
  r.c_.assign(d, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  assert(a.F_ == b.F_);
  Poly r(a.F_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = a.F_.add(a.coeff(i), b.coeff(i));
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  assert(a.F_ == b.F_);
  Poly r(a.F_);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = a.F_.sub(a.coeff(i), b.coeff(i));
  r.normalize();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.F_ == b.F_);
  Poly r(a.F_);
  if (a.is_zero() || b.is_zero()) return r;
  const Fp& F = a.F_;
  const std::uint64_t p = F.p();
  // Schoolbook convolution.  Adequate at the degrees this project meets;
  // a subquadratic algorithm can be slotted in here if that changes.
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      std::uint64_t& cell = acc[i + j];
      if (cell >= kAccGuard) cell %= p;
      cell += ai * b.c_[j];
    }
  }
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = acc[i] % p;
  r.normalize();
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw domain_error("divrem: zero divisor polynomial");
  const Fp& F = num.field();
  if (num.degree() < den.degree()) return {Poly::zero(F), num};

  const Fe ilc = F.inv(den.lc());
  std::vector<Fe> rem(num.coeffs());
  const std::size_t dd = static_cast<std::size_t>(den.degree());
  std::vector<Fe> quo(rem.size() - dd, 0);
  for (std::size_t i = rem.size(); i-- > dd;) {
    Fe c = rem[i];
    if (c == 0) continue;
    Fe q = F.mul(c, ilc);
    quo[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[i - dd + j] = F.sub(rem[i - dd + j], F.mul(q, den.coeff(j)));
  }
  rem.resize(dd);
  return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Fe eval(const Poly& f, Fe x) {
  const Fp& F = f.field();
  Fe r = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    r = F.add(F.mul(r, x), f.coeff(i));
  return r;
}

Poly frobenius_dilate(const Poly& f, unsigned long long r) {
  const Fp& F = f.field();
  unsigned long long q = r;
  while (q > 1) {
    if (q % F.p() != 0)
      throw domain_error("frobenius_dilate: exponent is not a power of p");
    q /= F.p();
  }
  if (r == 1 || f.is_zero()) return f;
  std::vector<Fe> out(static_cast<std::size_t>(f.degree()) * r + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    out[i * r] = f.coeff(i);
  return Poly(F, std::move(out));
}

Poly poly_pow(const Poly& f, unsigned long long e) {
  const Fp& F = f.field();
  if (e == 0) return Poly::constant(F, 1);
  // Split off the p-power part: f^(q*p^t) = dilate(f^q, p^t).
  unsigned long long pt = 1, q = e;
  while (q % F.p() == 0) {
    q /= F.p();
    pt *= F.p();
  }
  Poly base = f;
  Poly r = Poly::constant(F, 1);
  while (q) {
    if (q & 1) r = r * base;
    q >>= 1;
    if (q) base = base * base;
  }
  return frobenius_dilate(r, pt);
}

Poly derivative(const Poly& f) {
  const Fp& F = f.field();
  Poly r(F);
  if (f.degree() < 1) return r;
  std::vector<Fe> out(static_cast<std::size_t>(f.degree()), 0);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out[i - 1] = F.mul(f.coeff(i), i % F.p());
  return Poly(F, std::move(out));
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    Fe c = f.coeff(i);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c);
      s += "T";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace hqcf
