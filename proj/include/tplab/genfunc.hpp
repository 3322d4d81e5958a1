#pragma once

// Truncated power series with exact integer coefficients, and the infinite
// products that generate the toothpick-family sequences.

#include <cstddef>
#include <vector>

#include "tplab/numkit.hpp"
#include "tplab/sequence.hpp"

namespace tplab {

class NonUnitDivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients of x^0 .. x^(order-1); everything above is unknown.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(std::vector<Int> coeffs, std::size_t order);

  static PowerSeries one(std::size_t order) { return monomial(1, 0, order); }
  static PowerSeries monomial(Int c, std::size_t exponent, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  Int operator[](std::size_t n) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  /// Plain convolution, O(order^2).
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries scale(Int c) const;
  /// Multiplies by x^k.
  PowerSeries shift(std::size_t k) const;
  /// Divides every coefficient by c, throwing InexactDivision on a remainder.
  PowerSeries exact_divide(Int c) const;

  /// Running sums.
  PowerSeries divide_by_one_minus_x() const;
  /// b(n) = a(n) - 2 b(n-1).
  PowerSeries divide_by_one_plus_2x() const;
  /// General division; the divisor's constant term must be 1 or -1.
  PowerSeries divide(const PowerSeries& d) const;

  /// In-place multiplication by (c0 + c1 x^e1 + c2 x^e2), 0 <= e1 < e2.
  void mul_trinomial(Int c0, Int c1, std::size_t e1, Int c2, std::size_t e2);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Int> coeffs_;
};

/// prod_{k >= start_k} (1 + gamma x^(2^k - 1) + delta x^(2^k)) truncated to `order`.
PowerSeries product_expand(Int gamma, Int delta, unsigned start_k, std::size_t order);

/// x (alpha + beta x) prod_{k >= start_k} (1 + gamma x^(2^k - 1) + delta x^(2^k)).
PowerSeries block_product_gf(Int alpha, Int beta, Int gamma, Int delta, unsigned start_k, std::size_t order);

/// Ulam-Warburton u(n): x (4 prod_{k >= 0} (1 + 3 x^(2^k)) - 1) / 3.
PowerSeries uw_gf(std::size_t order);
/// The d-dimensional analogue with 2d and 2d - 1 in place of 4 and 3.
PowerSeries uw_d_gf(unsigned d, std::size_t order);

/// Corner sequence c(n).
PowerSeries corner_gf(std::size_t order);

enum class ToothpickForm { product_from_1, product_from_0 };
/// Toothpick sequence t(n), from either of the two equivalent product forms.
PowerSeries toothpick_gf(std::size_t order, ToothpickForm form = ToothpickForm::product_from_0);
/// Running totals T(n).
PowerSeries toothpick_total_gf(std::size_t order);

/// Leftist toothpicks l(n): x (1 + x) prod_{k >= 1} (1 + 2 x^(2^k)).
PowerSeries leftist_gf(std::size_t order);

/// Coefficients 0..order-1 as a nonnegative sequence; throws on a negative coefficient.
IntSequence to_sequence(const PowerSeries& s, const char* label);

}  // namespace tplab
