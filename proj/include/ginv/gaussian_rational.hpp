#pragma once

#include <ostream>
#include <string>

#include "ginv/big_rational.hpp"

namespace ginv {

// Exact element of Q(i).
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const noexcept { return re_; }
  const BigRational& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  // |z|^2
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational inverse() const {
    if (is_zero()) throw DivisionByZero();
    const BigRational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    BigRational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.im_.is_zero()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  // "re", "im i" or "re+im i" with rationals in p/q form.
  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    const std::string imag = im_ == BigRational(1)    ? "i"
                             : im_ == BigRational(-1) ? "-i"
                                                      : im_.to_string() + "i";
    if (re_.is_zero()) return imag;
    return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

private:
  BigRational re_;
  BigRational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

} // namespace ginv
