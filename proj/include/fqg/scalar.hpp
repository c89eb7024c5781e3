#pragma once

#include <gmpxx.h>

#include <complex>
#include <concepts>
#include <string>
#include <string_view>

namespace fqg {

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
 public:
  static constexpr bool is_exact = true;
  static constexpr const char* backend_name = "exact";

  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integer literals
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational ratio(long num, long den);
  /// Parses decimal or "p/q" text for each component. Throws ParseError.
  static GaussianRational parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// Sign of the real part.
  int real_sign() const { return sgn(re_); }
  GaussianRational conj() const { return {re_, -im_}; }

  std::string re_string() const { return re_.get_str(); }
  std::string im_string() const { return im_.get_str(); }
  std::string to_string() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Double-precision complex number whose comparisons use a process-wide
/// componentwise tolerance.
class ApproxComplex {
 public:
  static constexpr bool is_exact = false;
  static constexpr const char* backend_name = "float";
  static constexpr double default_tolerance = 1e-9;

  ApproxComplex() = default;
  ApproxComplex(long value) : v_(static_cast<double>(value), 0.0) {}  // NOLINT
  ApproxComplex(double re, double im) : v_(re, im) {}
  explicit ApproxComplex(std::complex<double> v) : v_(v) {}

  static ApproxComplex ratio(long num, long den);
  static ApproxComplex parse(std::string_view re, std::string_view im = "0");

  static double tolerance();
  static void set_tolerance(double tol);

  double re() const { return v_.real(); }
  double im() const { return v_.imag(); }
  std::complex<double> to_complex() const { return v_; }

  bool is_zero() const;
  bool is_real() const;
  int real_sign() const;
  ApproxComplex conj() const { return ApproxComplex(std::conj(v_)); }

  std::string re_string() const;
  std::string im_string() const;
  std::string to_string() const;

  ApproxComplex& operator+=(const ApproxComplex& o) { v_ += o.v_; return *this; }
  ApproxComplex& operator-=(const ApproxComplex& o) { v_ -= o.v_; return *this; }
  ApproxComplex& operator*=(const ApproxComplex& o) { v_ *= o.v_; return *this; }
  ApproxComplex& operator/=(const ApproxComplex& o);

  friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
  friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
  friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
  friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
  ApproxComplex operator-() const { return ApproxComplex(-v_); }

  friend bool operator==(const ApproxComplex& a, const ApproxComplex& b);

 private:
  std::complex<double> v_{0.0, 0.0};
};

template <class S>
concept Scalar = std::regular<S> && requires(S a, const S& b) {
  { S::is_exact } -> std::convertible_to<bool>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a.conj() } -> std::same_as<S>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.real_sign() } -> std::same_as<int>;
  { S::ratio(1L, 2L) } -> std::same_as<S>;
  { S::parse("1", "0") } -> std::same_as<S>;
};

using Exact = GaussianRational;
using Approx = ApproxComplex;

/// Parses a single component ("p/q", integer, or decimal) to an exact rational.
mpq_class parse_rational(std::string_view text);

}  // namespace fqg
