#pragma once

#include <string>
#include <vector>

#include "hqcf/poly.hpp"

namespace hqcf {

// Truncated formal Laurent series in 1/T over F_p, the computational
// stand-in for F_p((1/T)).
//
// Knowledge model: coefficients are known exactly for every exponent
// >= floor(); everything above val() is exactly zero.  When exact() is
// set the series is a finite Laurent polynomial, i.e. exponents below the
// stored range are zero as well.  A series whose known coefficients are
// all zero ("vanishes") is either the exact zero or a zero-to-precision
// marker: |value| < |T|^floor but nothing more is known.
//
// Every operation computes the weakest knowledge floor justified by its
// inputs; consuming a coefficient below that floor is a hard
// precision_error, never a silent zero.
class Series {
 public:
  static Series zero(const Fp& f);
  static Series from_poly(const Poly& a);
  // Value zero to the given precision: all exponents >= floor are 0.
  static Series zero_to_precision(const Fp& f, Deg floor);
  // Build from descending coefficients; c[0] is the coefficient at `top`.
  Series(const Fp& f, Deg top, std::vector<Fe> descending, bool exact);

  const Fp& field() const { return F_; }
  bool exact() const { return exact_; }
  bool has_terms() const { return !c_.empty(); }
  // True when no nonzero coefficient is visible.
  bool vanishes() const { return c_.empty(); }

  // Leading exponent.  kNegInfDeg for the exact zero; unknown (throws)
  // for a zero-to-precision marker.
  Deg val() const;
  // Lowest exponent with a known coefficient (meaningless for exact).
  Deg floor() const { return floor_; }
  Deg known_floor() const { return exact_ ? kNegInfDeg : floor_; }
  Fe leading() const;

  // Coefficient at exponent e; throws precision_error if e is below the
  // knowledge floor.
  Fe coeff(Deg e) const;

  std::size_t term_count() const { return c_.size(); }

  // Sum of the terms with exponent >= 0.  Requires the whole nonnegative
  // window to be known.
  Poly polynomial_part() const;

  Series truncated(Deg new_floor) const;
  // Caller asserts that everything below the stored range is genuinely
  // zero (used by Newton iterations that work on exact truncations).
  Series assuming_exact() const;

  Series scaled(Fe s) const;
  Series operator-() const;

  std::string dump() const;  // debug form "T^i0: [c0, c1, ...]"

 private:
  Fp F_;
  Deg floor_;  // lowest stored exponent; knowledge floor when !exact_
  bool exact_;
  std::vector<Fe> c_;  // descending; c_[0] at exponent floor_+size-1, nonzero

  Series(const Fp& f) : F_(f), floor_(0), exact_(true) {}
  void normalize();
  Fe at_or_zero(Deg e) const;
  Deg top_bound() const {  // upper bound for unknown content when empty
    return c_.empty() ? floor_ - 1 : floor_ + static_cast<Deg>(c_.size()) - 1;
  }

  friend Series add(const Series&, const Series&);
  friend Series sub(const Series&, const Series&);
  friend Series mul(const Series&, const Series&, Deg);
  friend Series inverse(const Series&, Deg);
  friend Series dilate(const Series&, unsigned long long, Deg);
};

// Binary operations.  `floor_hint` only truncates: the result floor is
// the max of the honest floor and the hint.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b, Deg floor_hint = kNegInfDeg);
// 1/x.  A non-monomial exact input has no natural truncation point and
// requires an explicit floor.
Series inverse(const Series& x, Deg floor_hint = kNegInfDeg);
Series div(const Series& a, const Series& b, Deg floor_hint = kNegInfDeg);
// Exponent dilation e -> r*e (the Frobenius x -> x^r for r a p-power;
// the power-of-p check is the caller's when using dilate directly).
Series dilate(const Series& a, unsigned long long r, Deg floor_hint = kNegInfDeg);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// Series of num/den with n_terms known coefficients; exact when the
// division terminates.
Series from_fraction(const Poly& num, const Poly& den, std::size_t n_terms);

// alpha^r for r a power of p, by exponent dilation.  Rejects other r.
Series frobenius_pow(const Series& a, unsigned long long r);

}  // namespace hqcf
