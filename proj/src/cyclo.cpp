#include "cplab/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cplab {

namespace {

// zeta^6 = -1 - zeta^3 (from x^6 + x^3 + 1 = 0), so exponents 6..8 reduce to
// two basis monomials: zeta^e = -zeta^(e-6) - zeta^(e-3).
void add_zeta_pow(std::array<Rational, 6>& c, long k, const Rational& q) {
  long e = k % 9;
  if (e < 0) e += 9;
  if (e < 6) {
    c[static_cast<size_t>(e)] += q;
  } else {
    c[static_cast<size_t>(e - 6)] -= q;
    c[static_cast<size_t>(e - 3)] -= q;
  }
}

}  // namespace

CycloNum CycloNum::zeta_pow(long k) {
  CycloNum r;
  add_zeta_pow(r.c_, k, Rational(1));
  return r;
}

CycloNum CycloNum::root_of_unity(int order, long k) {
  if (order != 1 && order != 3 && order != 9)
    throw std::invalid_argument("root_of_unity: order must be 1, 3 or 9");
  return zeta_pow(static_cast<long>(9 / order) * k);
}

bool CycloNum::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (int i = 1; i < 6; ++i)
    if (c_[static_cast<size_t>(i)] != 0) return false;
  return true;
}

CycloNum CycloNum::operator-() const {
  CycloNum r;
  for (int i = 0; i < 6; ++i) r.c_[static_cast<size_t>(i)] = -c_[static_cast<size_t>(i)];
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  for (int i = 0; i < 6; ++i) c_[static_cast<size_t>(i)] += o.c_[static_cast<size_t>(i)];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  for (int i = 0; i < 6; ++i) c_[static_cast<size_t>(i)] -= o.c_[static_cast<size_t>(i)];
  return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  std::array<Rational, 6> out{};
  for (int i = 0; i < 6; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < 6; ++j) {
      if (o.c_[static_cast<size_t>(j)] == 0) continue;
      add_zeta_pow(out, i + j, c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)]);
    }
  }
  c_ = out;
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNum: division by zero");
  // Solve (this) * x = 1 as a 6x6 rational linear system over the basis.
  // Column j of the matrix is the coefficient vector of (this) * zeta^j.
  std::array<std::array<Rational, 7>, 6> m{};  // augmented
  for (int j = 0; j < 6; ++j) {
    CycloNum col = *this * zeta_pow(j);
    for (int i = 0; i < 6; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.c_[static_cast<size_t>(i)];
  }
  m[0][6] = 1;
  // Gaussian elimination with exact pivoting.
  for (int col = 0; col < 6; ++col) {
    int piv = -1;
    for (int r = col; r < 6; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("CycloNum: singular inverse system");
    std::swap(m[static_cast<size_t>(col)], m[static_cast<size_t>(piv)]);
    Rational p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = col; j <= 6; ++j) m[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
    for (int r = 0; r < 6; ++r) {
      if (r == col) continue;
      Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = col; j <= 6; ++j)
        m[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  CycloNum x;
  for (int i = 0; i < 6; ++i) x.c_[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][6];
  return x;
}

CycloNum CycloNum::pow(long n) const {
  CycloNum base = n < 0 ? inverse() : *this;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  CycloNum acc(1);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

CycloNum CycloNum::conj() const {
  CycloNum r;
  for (int k = 0; k < 6; ++k)
    if (c_[static_cast<size_t>(k)] != 0) add_zeta_pow(r.c_, 9 - k, c_[static_cast<size_t>(k)]);
  return r;
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> z = 0.0;
  for (int k = 0; k < 6; ++k) {
    if (c_[static_cast<size_t>(k)] == 0) continue;
    double q = c_[static_cast<size_t>(k)].get_d();
    z += q * std::polar(1.0, 2.0 * std::numbers::pi * k / 9.0);
  }
  return z;
}

int CycloNum::multiplicative_order(int limit) const {
  CycloNum acc(1);
  for (int m = 1; m <= limit; ++m) {
    acc *= *this;
    if (acc.is_one()) return m;
  }
  return 0;
}

std::string CycloNum::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 6; ++k) {
    const Rational& q = c_[static_cast<size_t>(k)];
    if (q == 0) continue;
    Rational a = q;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

int CycloNum::monomial_form(Rational* rat) const {
  if (is_zero()) {
    if (rat) *rat = 0;
    return 0;
  }
  for (int k = 0; k < 9; ++k) {
    CycloNum t = *this * zeta_pow(-k);
    if (t.is_rational()) {
      if (rat) *rat = t.rational_part();
      return k;
    }
  }
  return -1;
}

std::string CycloNum::pretty() const {
  Rational q;
  int k = monomial_form(&q);
  if (k < 0) return "(" + str() + ")";
  std::ostringstream os;
  bool have_rat = false;
  if (q == -1 && k != 0) {
    os << "-";
  } else if (q != 1 || k == 0) {
    os << to_string(q);
    have_rat = true;
  }
  if (k != 0) {
    if (have_rat) os << " ";
    if (k % 3 == 0) {
      os << "eps";
      if (k == 6) os << "^-1";
    } else {
      int e = k <= 4 ? k : k - 9;  // symmetric exponent window
      os << "delta";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace cplab
