#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>

#include "bautin/errors.hpp"
#include "bautin/scalar.hpp"

namespace bautin {

struct UnknownId {
  int value = 0;
  friend auto operator<=>(const UnknownId&, const UnknownId&) = default;
};

// Affine form  constant + sum_i c_i * u_i  over a concrete base domain B.
// Forms are only ever multiplied by concrete scalars: a product of two forms
// that both carry unknowns is rejected instead of silently going quadratic.
template <class B>
class LinearForm {
 public:
  using Base = B;

  LinearForm() = default;
  LinearForm(long v) : constant_(v) {}  // NOLINT(google-explicit-constructor)
  explicit LinearForm(B constant) : constant_(std::move(constant)) {}

  static LinearForm unknown(UnknownId id, const B& coefficient) {
    LinearForm f(coefficient * B(0));
    f.terms_.emplace(id, coefficient);
    return f;
  }

  const B& constant() const noexcept { return constant_; }
  const std::map<UnknownId, B>& terms() const noexcept { return terms_; }

  B coefficient(UnknownId id) const {
    const auto it = terms_.find(id);
    return it == terms_.end() ? constant_ * B(0) : it->second;
  }

  bool carries_unknowns() const noexcept { return !terms_.empty(); }
  bool is_zero() const { return detail::scalar_is_zero(constant_) && terms_.empty(); }

  // Substitutes values[id] for every unknown.
  B evaluate(std::span<const B> values) const {
    B out = constant_;
    for (const auto& [id, c] : terms_) {
      if (id.value < 0 || static_cast<std::size_t>(id.value) >= values.size())
        throw UsageError("linear form evaluated without a value for unknown " +
                         std::to_string(id.value));
      out += c * values[static_cast<std::size_t>(id.value)];
    }
    return out;
  }

  LinearForm& operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [id, c] : o.terms_) accumulate(id, c);
    return *this;
  }
  LinearForm& operator-=(const LinearForm& o) {
    constant_ -= o.constant_;
    for (const auto& [id, c] : o.terms_) accumulate(id, -c);
    return *this;
  }
  LinearForm& operator*=(const LinearForm& o) {
    if (carries_unknowns() && o.carries_unknowns())
      throw UsageError("product of two linear forms that both carry unknowns");
    if (o.carries_unknowns()) {
      LinearForm scaled = o;
      scaled.scale(constant_);
      return *this = std::move(scaled);
    }
    scale(o.constant_);
    return *this;
  }
  LinearForm& operator/=(const LinearForm& o) {
    if (o.carries_unknowns()) throw UsageError("division by a linear form that carries unknowns");
    constant_ /= o.constant_;
    for (auto& [id, c] : terms_) c /= o.constant_;
    return *this;
  }

  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, const LinearForm& b) { return a *= b; }
  friend LinearForm operator/(LinearForm a, const LinearForm& b) { return a /= b; }
  friend LinearForm operator-(LinearForm a) {
    a.constant_ = -a.constant_;
    for (auto& [id, c] : a.terms_) c = -c;
    return a;
  }
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

 private:
  void accumulate(UnknownId id, const B& c) {
    auto [it, inserted] = terms_.try_emplace(id, c);
    if (!inserted) {
      it->second += c;
      if (detail::scalar_is_zero(it->second)) terms_.erase(it);
    } else if (detail::scalar_is_zero(c)) {
      terms_.erase(it);
    }
  }

  void scale(const B& s) {
    constant_ *= s;
    if (detail::scalar_is_zero(s)) {
      terms_.clear();
      return;
    }
    for (auto& [id, c] : terms_) c *= s;
  }

  B constant_{};
  std::map<UnknownId, B> terms_;
};

template <class B>
bool is_zero(const LinearForm<B>& f) {
  return f.is_zero();
}

template <class B>
LinearForm<B> from_rational(const Rational& q, const LinearForm<B>& like) {
  return LinearForm<B>(from_rational(q, like.constant()));
}

template <class B>
std::string to_string(const LinearForm<B>& f) {
  std::string out = to_string(f.constant());
  for (const auto& [id, c] : f.terms()) out += " + (" + to_string(c) + ")*u" + std::to_string(id.value);
  return out;
}

template <class T>
inline constexpr bool is_linear_form_v = false;
template <class B>
inline constexpr bool is_linear_form_v<LinearForm<B>> = true;

}  // namespace bautin
