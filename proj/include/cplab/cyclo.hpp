#pragma once

#include <array>
#include <complex>
#include <string>

#include "cplab/rational.hpp"

namespace cplab {

/// An element of the cyclotomic field Q(zeta), zeta = exp(2*pi*i/9), stored
/// on the power basis zeta^0..zeta^5 and kept reduced modulo the minimal
/// polynomial x^6 + x^3 + 1. Equality is coefficient equality.
///
/// This is the scalar field of the whole symbolic side of the project: the
/// two distinguished roots of unity are eps = zeta^3 (a primitive cube root)
/// and delta = zeta (a primitive 9th root).
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(const Rational& r) { c_[0] = r; }  // NOLINT(google-explicit-constructor)
  CycloNum(long n) { c_[0] = n; }             // NOLINT(google-explicit-constructor)

  /// zeta^k for any integer k, reduced to the basis.
  static CycloNum zeta_pow(long k);

  /// A k-th power of the canonical root of the given order. `order` must be
  /// one of 1, 3, 9; the result is zeta^(9k/order).
  static CycloNum root_of_unity(int order, long k);

  static CycloNum eps() { return zeta_pow(3); }
  static CycloNum delta() { return zeta_pow(1); }

  const Rational& coeff(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const { return *this == CycloNum(1); }
  bool is_rational() const;
  /// Requires is_rational().
  const Rational& rational_part() const { return c_[0]; }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloNum inverse() const;
  /// Integer power; negative exponents go through inverse().
  CycloNum pow(long n) const;

  /// Complex conjugation: the field automorphism zeta -> zeta^-1, realized as
  /// the exponent map k -> 9-k followed by reduction.
  CycloNum conj() const;

  /// Numeric evaluation at zeta = exp(2*pi*i/9).
  std::complex<double> to_complex() const;

  /// Smallest m >= 1 with pow(m) == 1, or 0 if none up to `limit`.
  int multiplicative_order(int limit = 64) const;

  bool operator==(const CycloNum& o) const { return c_ == o.c_; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  /// Report form: "c0 + c1*z + ... + c5*z^5" with rational coefficients,
  /// zero coefficients skipped; "0" for zero.
  std::string str() const;

  /// Short form when the value is rational * zeta^k: e.g. "eps", "delta^-1",
  /// "2/3 delta^2", "-1". Falls back to str() in parentheses otherwise.
  std::string pretty() const;

  /// If the value is rational * zeta^k, return the exponent k in 0..8 and set
  /// `rat`; otherwise return -1.
  int monomial_form(Rational* rat) const;

 private:
  std::array<Rational, 6> c_{};
};

}  // namespace cplab
