#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nilskt {

/// Library-wide error type. CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default tolerance for float-mode zero tests.
inline constexpr double kDefaultTol = 1e-9;

/// A complex coefficient in one of two modes: exact Gaussian rational
/// (pair of GMP rationals) or binary64 (std::complex<double>).
/// Arithmetic is closed in exact mode; mixing modes promotes to float.
class Scalar {
 public:
  Scalar() : exact_(true) {}
  Scalar(int v) : exact_(true), re_(v) {}
  Scalar(long v) : exact_(true), re_(static_cast<long>(v)) {}

  static Scalar exact(mpq_class re, mpq_class im = 0) {
    Scalar s;
    s.exact_ = true;
    s.re_ = std::move(re);
    s.im_ = std::move(im);
    s.re_.canonicalize();
    s.im_.canonicalize();
    return s;
  }
  /// Parse "p/q" (or integer) strings.
  static Scalar rational(const std::string& re, const std::string& im = "0");
  static Scalar floating(double re, double im = 0.0) {
    Scalar s;
    s.exact_ = false;
    s.f_ = {re, im};
    return s;
  }
  static Scalar floating(std::complex<double> z) { return floating(z.real(), z.imag()); }
  /// The imaginary unit (exact).
  static Scalar i() { return exact(0, 1); }
  /// i^k for any integer k (exact).
  static Scalar ipow(int k);

  bool is_exact() const { return exact_; }
  std::complex<double> to_complex() const {
    return exact_ ? std::complex<double>(re_.get_d(), im_.get_d()) : f_;
  }
  /// Exact real/imaginary parts; throws in float mode.
  const mpq_class& exact_re() const;
  const mpq_class& exact_im() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar conj() const;
  /// |z|^2, in the same mode.
  Scalar abs2() const;
  /// Real part (imaginary part dropped), same mode.
  Scalar real_part() const;
  Scalar imag_part() const;

  double abs() const { return std::abs(to_complex()); }
  bool is_zero(double tol = 0.0) const {
    if (exact_) return re_ == 0 && im_ == 0;
    return std::abs(f_) <= tol;
  }
  bool near(const Scalar& o, double tol = kDefaultTol) const {
    Scalar d = *this - o;
    return d.exact_ ? d.is_zero() : d.is_zero(tol);
  }
  /// Strict equality: exact compares rationals, float compares bits.
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Sign of the real part with the imaginary part required to vanish.
  /// Returns -1, 0, +1; float mode treats |re| <= tol as 0.
  int sign_real(double tol = kDefaultTol) const;
  bool is_real(double tol = kDefaultTol) const {
    return exact_ ? im_ == 0 : std::abs(f_.imag()) <= tol;
  }

  std::string str() const;

 private:
  bool exact_;
  mpq_class re_, im_;          // exact mode
  std::complex<double> f_{0};  // float mode
};

inline Scalar operator*(int k, const Scalar& s) { return Scalar(k) * s; }

}  // namespace nilskt
