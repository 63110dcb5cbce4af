#pragma once

#include <cmath>
#include <string>

#include <gmpxx.h>

namespace gpd {

using Rational = mpq_class;

// Parses "3", "-2/5", "0.25", "1e-3" exactly. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static bool is_zero(const Rational& x, double = 1.0) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b, double = 1.0) { return a == b; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static Rational from_rational(const Rational& r) { return r; }
  static std::string to_string(const Rational& x) { return rational_to_string(x); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  // Relative tolerance; set once at startup before any worker threads exist.
  static inline double tolerance = 1e-10;

  static bool is_zero(double x, double scale = 1.0) {
    return std::abs(x) <= tolerance * std::max(1.0, scale);
  }
  static bool equal(double a, double b, double scale = 1.0) { return is_zero(a - b, scale); }
  static double magnitude(double x) { return std::abs(x); }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static std::string to_string(double x);
};

}  // namespace gpd
