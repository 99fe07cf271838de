/*
  series.hpp — exact integer polynomials and truncated formal power series.

  Everything here is arbitrary-precision and never touches floating point:
  termination detection (trailing zeros of a quotient) has to be exact.
*/

#pragma once

#include "weyl/errors.hpp"
#include "weyl/integers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weyl {

// Polynomial over Z, coefficients indexed from t^0. Trailing zeros are
// stripped on construction; the zero polynomial has no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly one() { return IntPoly({Integer(1)}); }
  static IntPoly from_int64(const std::vector<std::int64_t>& coeffs);

  std::optional<std::size_t> degree() const;
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Integer(0);
  }
  bool is_zero() const { return c_.empty(); }

  Integer eval(const Integer& x) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

 private:
  std::vector<Integer> c_;  // c_.empty() or c_.back() != 0
};

// Power series known exactly through t^truncation.
class TruncSeries {
 public:
  // Coefficients c_0..c_T; must be nonempty.
  explicit TruncSeries(std::vector<Integer> coeffs);
  static TruncSeries from_int64(const std::vector<std::int64_t>& coeffs);
  static TruncSeries from_uint64(const std::vector<std::uint64_t>& coeffs);

  // Polynomial viewed as a series: exact out to any truncation.
  static TruncSeries from_poly(const IntPoly& p, int truncation);

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& coeff(int k) const { return c_[k]; }

  TruncSeries truncated(int t) const;

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

 private:
  std::vector<Integer> c_;
};

// Cauchy product, carried to the shorter of the two truncations.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

// Exact quotient q with q * den = num through the shared truncation.
// Requires den.c_0 = +1 or -1 (throws NonUnitConstant otherwise); the
// integer recurrence then never leaves Z.
TruncSeries series_div(const TruncSeries& num, const TruncSeries& den);

// If the last `guard` coefficients of s are all zero, the prefix read as a
// polynomial; nullopt when the series shows no sign of terminating at this
// truncation. guard must be >= 1 and <= truncation.
std::optional<IntPoly> polynomial_terminates(const TruncSeries& s, int guard);

// "1, -1, 0, -2" — lowest degree first.
std::string to_coeff_string(const IntPoly& p);
std::string to_coeff_string(const TruncSeries& s);
std::vector<Integer> parse_coeff_string(const std::string& text);

// "1 - t - 2 t^3 + t^24" — display form used in reports.
std::string to_display_string(const IntPoly& p);
// Same, with an explicit remainder marker: "1 + 6 t + ... + O(t^26)".
std::string to_display_string(const TruncSeries& s);

}  // namespace weyl
