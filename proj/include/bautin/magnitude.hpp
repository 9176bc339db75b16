#pragma once

#include <cmath>

#include "bautin/rational.hpp"

namespace bautin {

// Running-error-bound domain: every operation acts on absolute values, so a
// computation replayed here yields an upper bound on the magnitude of every
// partial sum that the same computation forms over a real domain.  Subtraction
// therefore adds.
class Magnitude {
 public:
  Magnitude() = default;
  Magnitude(long v) : v_(std::fabs(static_cast<long double>(v))) {}  // NOLINT
  explicit Magnitude(long double v) : v_(std::fabs(v)) {}

  long double value() const noexcept { return v_; }

  friend Magnitude operator+(Magnitude a, Magnitude b) { return Magnitude(a.v_ + b.v_); }
  friend Magnitude operator-(Magnitude a, Magnitude b) { return Magnitude(a.v_ + b.v_); }
  friend Magnitude operator*(Magnitude a, Magnitude b) { return Magnitude(a.v_ * b.v_); }
  // Division appears only with exact integer-derived divisors in the engine.
  friend Magnitude operator/(Magnitude a, Magnitude b) { return Magnitude(a.v_ / b.v_); }
  friend Magnitude operator-(Magnitude a) { return a; }
  friend bool operator==(Magnitude a, Magnitude b) = default;

 private:
  long double v_ = 0;
};

inline bool is_zero(const Magnitude& m) { return m.value() == 0; }
inline Magnitude from_rational(const Rational& q, const Magnitude& /*like*/) {
  return Magnitude(static_cast<long double>(q.to_double()));
}

}  // namespace bautin
