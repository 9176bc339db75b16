#include "bautin/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "bautin/errors.hpp"

namespace bautin {

mpfr_prec_t BigReal::bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + kGuardBits;
}

BigReal::BigReal() : digits_(0) {
  mpfr_init2(v_, kLiteralBits);
  mpfr_set_zero(v_, 1);
}

BigReal::BigReal(long value) : digits_(0) {
  mpfr_init2(v_, kLiteralBits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(long value, int digits) : digits_(digits) {
  mpfr_init2(v_, std::max(bits_for_digits(digits), kLiteralBits));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& q, int digits) : digits_(digits) {
  mpfr_init2(v_, bits_for_digits(digits));
  mpfr_set_q(v_, q.get().get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, int digits) {
  // Parsing through the exact rational keeps decimal inputs correctly rounded.
  return BigReal(Rational::parse(text), digits);
}

BigReal::BigReal(const BigReal& other) : digits_(other.digits_) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(v_, kLiteralBits);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(v_, other.v_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

void BigReal::raise_precision_to(mpfr_prec_t bits, int digits) {
  digits_ = std::max(digits_, digits);
  if (bits > mpfr_get_prec(v_)) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

BigReal& BigReal::operator+=(const BigReal& o) {
  raise_precision_to(mpfr_get_prec(o.v_), o.digits_);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
  raise_precision_to(mpfr_get_prec(o.v_), o.digits_);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
  raise_precision_to(mpfr_get_prec(o.v_), o.digits_);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
  if (o.is_zero()) throw UsageError("BigReal division by zero");
  raise_precision_to(mpfr_get_prec(o.v_), o.digits_);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& a) {
  BigReal r(a);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string BigReal::str(int significant) const {
  if (significant <= 0) significant = std::max(digits_, 17);
  if (is_zero()) return "0";
  const std::string fmt = "%." + std::to_string(significant - 1) + "Re";
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, fmt.c_str(), v_) < 0) throw InternalError("mpfr_asprintf failed");
  std::unique_ptr<char, void (*)(char*)> holder(raw, mpfr_free_str);
  return std::string(raw);
}

long BigReal::exponent10() const {
  if (is_zero()) return std::numeric_limits<long>::min() / 2;
  return static_cast<long>(std::floor(log10_abs(*this)));
}

BigReal abs(const BigReal& x) { return x.sign() < 0 ? -x : x; }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("square root of a negative BigReal");
  BigReal r(x);
  mpfr_sqrt(r.get_mpfr_t(), x.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, int exponent) {
  if (exponent < 0) return BigReal(1) / pow(x, -exponent);
  BigReal result(1, x.digits());
  BigReal b = x;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= b;
    b *= b;
  }
  return result;
}

BigReal pow10(long e, const BigReal& like) {
  BigReal r(1, std::max(like.digits(), BigReal::kMinDigits));
  mpfr_ptr p = r.get_mpfr_t();
  mpfr_ui_pow_ui(p, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
  if (e < 0) mpfr_ui_div(p, 1, p, MPFR_RNDN);
  return r;
}

BigReal with_digits(const BigReal& x, int digits) {
  BigReal r(0, digits);
  mpfr_set(r.get_mpfr_t(), x.get(), MPFR_RNDN);
  return r;
}

double log10_abs(const BigReal& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  const double mant = mpfr_get_d_2exp(&exp2, x.get(), MPFR_RNDN);
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
}

}  // namespace bautin
