#ifndef PLURIND_GAUSSIAN_HPP
#define PLURIND_GAUSSIAN_HPP

#include <complex>
#include <string>
#include <vector>

#include "rational.hpp"

namespace plurind {

// Exact complex number with rational real and imaginary parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(long r) : re(r) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  // |z|^2, exact.
  Rational norm() const { return re * re + im * im; }

  Gaussian conj() const { return {re, -im}; }

  std::complex<double> to_complex() const {
    return {to_double(re), to_double(im)};
  }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.norm();
    if (n == 0) fail(ErrorCode::Invalid, "division by zero Gaussian rational");
    Gaussian p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) {
    return !(a == b);
  }
};

// Point of (Q+iQ)^n: polynomial arguments and shift centers.
using GPoint = std::vector<Gaussian>;

// Human-readable exact form: "0", "2", "-1/2", "3i", "1+i", "1/2-3/4i".
std::string to_string(const Gaussian& g);

inline GPoint gpoint_zero(int n) { return GPoint(static_cast<size_t>(n)); }

}  // namespace plurind

#endif
