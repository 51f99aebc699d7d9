#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace treeprod {

/// Exact scalar for the rational numeric mode.
using Rational = mpq_class;

/// Comparison and formatting semantics for the two numeric modes.
/// Rational compares exactly; double uses a fixed tolerance for every
/// equality decision (point equality, divergence, validation).
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static bool eq(const Rational& a, const Rational& b) { return a == b; }
  static Rational abs(const Rational& a) { return ::abs(a); }
  static double to_double(const Rational& a) { return a.get_d(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-9;
  static bool eq(double a, double b) { return std::fabs(a - b) <= tolerance; }
  static double abs(double a) { return std::fabs(a); }
  static double to_double(double a) { return a; }
};

template <class S>
bool scalar_eq(const S& a, const S& b) {
  return scalar_traits<S>::eq(a, b);
}

/// Strict less-than modulo the mode's equality.
template <class S>
bool scalar_lt(const S& a, const S& b) {
  return a < b && !scalar_eq(a, b);
}

template <class S>
bool scalar_le(const S& a, const S& b) {
  return a < b || scalar_eq(a, b);
}

template <class S>
S scalar_abs(const S& a) {
  return scalar_traits<S>::abs(a);
}

/// Two-argument rational construction with canonicalization.
Rational make_rational(long long num, long long den);

/// Decimal string if the denominator divides a power of ten, "num/den"
/// otherwise. Doubles use the shortest round-trip form.
std::string scalar_str(const Rational& a);
std::string scalar_str(double a);

/// Accepts "-12", "3.25" and "7/4"; empty result on malformed input.
std::optional<Rational> parse_rational(std::string_view text);
std::optional<double> parse_double(std::string_view text);

template <class S>
std::optional<S> parse_scalar(std::string_view text);

template <>
inline std::optional<Rational> parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
inline std::optional<double> parse_scalar<double>(std::string_view text) {
  return parse_double(text);
}

}  // namespace treeprod
