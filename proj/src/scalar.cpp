#include "fqg/scalar.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fqg/error.hpp"

namespace fqg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpq_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return mpq_class(negative ? mpz_class(-z) : z);
}

std::atomic<double> g_tolerance{ApproxComplex::default_tolerance};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_integer(trim(s.substr(0, slash)), text);
    mpq_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q = num / den;
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac.empty() && !all_digits(frac)) ||
        (int_part.empty() && frac.empty())) {
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    mpz_class fnum = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpq_class q(whole * scale + fnum, scale);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
  }
  return parse_integer(s, text);
}

// ---------------------------------------------------------------- exact

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("GaussianRational::ratio: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(q);
}

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
  return GaussianRational(parse_rational(re), parse_rational(im));
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  return "(" + re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i)";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

// ---------------------------------------------------------------- float

ApproxComplex ApproxComplex::ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ApproxComplex::ratio: zero denominator");
  return {static_cast<double>(num) / static_cast<double>(den), 0.0};
}

ApproxComplex ApproxComplex::parse(std::string_view re, std::string_view im) {
  auto component = [](std::string_view text) {
    std::string_view s = trim(text);
    if (s.find('/') != std::string_view::npos) return parse_rational(s).get_d();
    double value = 0.0;
    std::string owned(s);
    char* end = nullptr;
    value = std::strtod(owned.c_str(), &end);
    if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(value)) {
      throw ParseError("not a number: '" + owned + "'");
    }
    return value;
  };
  return {component(re), component(im)};
}

double ApproxComplex::tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void ApproxComplex::set_tolerance(double tol) {
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
  g_tolerance.store(tol, std::memory_order_relaxed);
}

bool ApproxComplex::is_zero() const {
  const double tol = tolerance();
  return std::abs(v_.real()) <= tol && std::abs(v_.imag()) <= tol;
}

bool ApproxComplex::is_real() const { return std::abs(v_.imag()) <= tolerance(); }

int ApproxComplex::real_sign() const {
  const double tol = tolerance();
  if (v_.real() > tol) return 1;
  if (v_.real() < -tol) return -1;
  return 0;
}

std::string ApproxComplex::re_string() const { return format_double(v_.real()); }
std::string ApproxComplex::im_string() const { return format_double(v_.imag()); }

std::string ApproxComplex::to_string() const {
  if (is_real()) return re_string();
  return "(" + re_string() + (v_.imag() >= 0 ? "+" : "") + im_string() + "i)";
}

ApproxComplex& ApproxComplex::operator/=(const ApproxComplex& o) {
  if (o.v_ == std::complex<double>(0.0, 0.0)) throw std::domain_error("ApproxComplex: division by zero");
  v_ /= o.v_;
  return *this;
}

bool operator==(const ApproxComplex& a, const ApproxComplex& b) {
  const double tol = ApproxComplex::tolerance();
  return std::abs(a.v_.real() - b.v_.real()) <= tol && std::abs(a.v_.imag() - b.v_.imag()) <= tol;
}

}  // namespace fqg
