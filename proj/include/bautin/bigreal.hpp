#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "bautin/rational.hpp"

namespace bautin {

// Extended-precision real backed by MPFR.  Each value carries its own precision;
// binary operations compute at the larger precision of the two operands, so a
// literal built from an integer never lowers the working precision.
class BigReal {
 public:
  static constexpr int kDefaultDigits = 60;
  static constexpr int kMinDigits = 30;
  static constexpr int kGuardBits = 32;
  // Exact small integers and zeros are created at this precision.
  static constexpr mpfr_prec_t kLiteralBits = 64;

  BigReal();
  BigReal(long value);  // NOLINT(google-explicit-constructor)
  BigReal(const Rational& q, int digits);
  BigReal(long value, int digits);
  static BigReal parse(std::string_view text, int digits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  // Decimal digits requested when the value was created (max over operands).
  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get_mpfr_t() noexcept { return v_; }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  // Scientific notation with `significant` digits (default: digits()).
  std::string str(int significant = 0) const;
  // Base-10 exponent of |x| (floor(log10|x|)); very negative for zero.
  long exponent10() const;

  BigReal& operator+=(const BigReal& o);
  BigReal& operator-=(const BigReal& o);
  BigReal& operator*=(const BigReal& o);
  BigReal& operator/=(const BigReal& o);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator-(const BigReal& a);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  static mpfr_prec_t bits_for_digits(int digits);

 private:
  void raise_precision_to(mpfr_prec_t bits, int digits);

  mpfr_t v_;
  int digits_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, int exponent);
// 10^e at the precision of `like`.
BigReal pow10(long e, const BigReal& like);
// Same value re-rounded to a new precision.
BigReal with_digits(const BigReal& x, int digits);
// log10 |x|; -inf for zero.
double log10_abs(const BigReal& x);

}  // namespace bautin
