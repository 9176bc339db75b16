#pragma once

#include <algorithm>
#include <concepts>
#include <string>

#include "bautin/bigreal.hpp"
#include "bautin/rational.hpp"

namespace bautin {

// Coefficient domains the engine runs over.  Every domain provides a field-like
// arithmetic, an exact zero test, and a way to embed an exact rational constant
// at the precision of a prototype value.

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const BigReal& r) { return r.is_zero(); }

inline Rational from_rational(const Rational& q, const Rational& /*like*/) { return q; }
inline BigReal from_rational(const Rational& q, const BigReal& like) {
  return BigReal(q, std::max(like.digits(), BigReal::kMinDigits));
}

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const BigReal& r) { return r.str(); }

namespace detail {
// Unqualified call so argument-dependent lookup sees every domain's is_zero,
// including ones declared after this header.
template <class T>
bool scalar_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

template <class S>
concept Scalar = std::copyable<S> && std::equality_comparable<S> &&
                 requires(const S a, const S b, const Rational q, long n) {
                   { a + b } -> std::convertible_to<S>;
                   { a - b } -> std::convertible_to<S>;
                   { a * b } -> std::convertible_to<S>;
                   { a / b } -> std::convertible_to<S>;
                   { -a } -> std::convertible_to<S>;
                   { is_zero(a) } -> std::same_as<bool>;
                   { from_rational(q, a) } -> std::convertible_to<S>;
                   S(n);
                 };

// Domains where every nonzero value is invertible (used by the dense oracle and
// determinants).
template <class S>
concept FieldScalar = Scalar<S> && (std::same_as<S, Rational> || std::same_as<S, BigReal>);

}  // namespace bautin
