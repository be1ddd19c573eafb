#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ginv/errors.hpp"

namespace ginv {

// Arbitrary-precision rational kept in lowest terms with a positive
// denominator. Zero is always 0/1.
class BigRational {
public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(long numerator, long denominator) {
    if (denominator == 0) throw DivisionByZero();
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
  }
  explicit BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }
  BigRational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
  }

  // Accepts "p" or "p/q" with an optional sign on p and q > 0.
  static BigRational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num_text, true) || (slash != std::string_view::npos && !valid_integer(den_text, false)))
      throw ParseError("malformed rational '" + std::string(text) + "'");
    // gmp rejects a leading '+'
    const auto strip = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
    mpz_class num(strip(num_text), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
      den = mpz_class(std::string(den_text), 10);
      if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return BigRational(num, den);
  }

  std::string to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }

  BigRational operator-() const { return BigRational(mpq_class(-value_)); }

  BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
  BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
  BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

private:
  static bool valid_integer(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  }

  mpq_class value_;
};

inline BigRational conj(const BigRational& q) { return q; }
inline bool is_zero(const BigRational& q) { return q.is_zero(); }

} // namespace ginv
