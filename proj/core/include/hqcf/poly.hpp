#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hqcf/fp.hpp"

namespace hqcf {

// Dense univariate polynomial over F_p in the indeterminate T.
// Coefficients are stored ascending by exponent in canonical form: the
// last stored coefficient is nonzero, and the zero polynomial stores
// nothing (degree() == kNegInfDeg).
class Poly {
 public:
  explicit Poly(const Fp& f) : F_(f) {}
  Poly(const Fp& f, std::vector<Fe> ascending);

  static Poly zero(const Fp& f) { return Poly(f); }
  static Poly constant(const Fp& f, Fe c);
  static Poly monomial(const Fp& f, Fe c, std::size_t d);
  static Poly var(const Fp& f) { return monomial(f, 1, 1); }

  const Fp& field() const { return F_; }
  Deg degree() const {
    return c_.empty() ? kNegInfDeg : static_cast<Deg>(c_.size()) - 1;
  }
  bool is_zero() const { return c_.empty(); }
  // Leading coefficient; the zero polynomial has none.
  Fe lc() const;
  Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Fe>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly scaled(Fe s) const;              // s * this
  Poly shifted(std::size_t d) const;    // this * T^d

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }

 private:
  Fp F_;
  std::vector<Fe> c_;

  void normalize();
};

// Euclidean division: num = q*den + r with deg r < deg den.
// The integral part [num/den] is the quotient.
std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);

// Horner evaluation at a field element.
Fe eval(const Poly& f, Fe x);

// f^e.  When e is a multiple of a p-power the Frobenius part is done by
// exponent dilation (coefficients are fixed by x -> x^p), the rest by
// binary powering.
Poly poly_pow(const Poly& f, unsigned long long e);

// f(T^r) for r a power of p, i.e. f^r written via dilation.
Poly frobenius_dilate(const Poly& f, unsigned long long r);

Poly derivative(const Poly& f);

// Human-readable form, e.g. "2T^3+4T"; for diagnostics and the CLI.
std::string to_string(const Poly& f);

}  // namespace hqcf
