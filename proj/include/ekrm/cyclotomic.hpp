#pragma once

#include <mpfr.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ekrm/rational.hpp"

namespace ekrm {

/// RAII MPFR value.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 64);
  BigFloat(const BigFloat& other);
  BigFloat& operator=(const BigFloat& other);
  ~BigFloat();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

struct RealInterval {
  BigFloat lo, hi;
  bool contains(double x) const;
  bool contains_zero() const;
  /// hi - lo, rounded up.
  double width() const;
};

/// An element of Q(zeta_n) in canonical form.
///
/// Coefficients live on the Zumbroich basis of Q(zeta_n) and the conductor
/// is always the least n whose field contains the value, so equal numbers
/// have identical representations. zeta_n = exp(2 pi i / n).
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long long v);  // NOLINT: implicit from integers is intended
  Cyclotomic(const Rational& v);  // NOLINT
  static Cyclotomic zeta(std::size_t n, long long k = 1);
  /// Sum of c * zeta_n^k over arbitrary (non-canonical) terms.
  static Cyclotomic from_terms(std::size_t n, const std::vector<std::pair<long long, Rational>>& terms);
  /// Inverse of to_string; throws std::invalid_argument.
  static Cyclotomic parse(const std::string& text);

  std::size_t conductor() const { return n_; }
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<std::size_t, Rational>> terms() const;

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  /// Throws std::domain_error unless rational.
  Rational rational_value() const;
  bool is_real() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  /// zeta -> zeta^-1, i.e. complex conjugation.
  Cyclotomic conjugate() const { return galois(-1); }
  /// zeta -> zeta^k; k must be coprime to the conductor.
  Cyclotomic galois(long long k) const;
  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.n_ == b.n_ && a.c_ == b.c_; }
  /// Total order on canonical encodings (not numeric order).
  friend bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

  /// `cyc(n; k1:c1, k2:c2)`; zero is `cyc(1;)`.
  std::string to_string() const;
  /// Short decimal form, e.g. "1.618034" or "-0.5+0.866025i".
  std::string preview(int digits = 6) const;
  double real_approx() const;
  double imag_approx() const;

  /// Enclosure of a real value with width at most 2^-precision.
  /// Throws std::domain_error for non-real input.
  RealInterval to_real_interval(unsigned precision) const;
  /// Exact sign of a real value.
  int sign() const;

 private:
  Cyclotomic(std::size_t n, std::vector<Rational> coeffs);
  static Cyclotomic canonical(std::size_t n, std::vector<Rational> coeffs);
  std::vector<Rational> lift(std::size_t m) const;

  std::size_t n_ = 1;
  std::vector<Rational> c_;  // dense, length n_
};

bool canonical_less(const Cyclotomic& a, const Cyclotomic& b);

/// Exact numeric comparison of real cyclotomics: -1, 0 or 1.
int compare_real(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace ekrm
