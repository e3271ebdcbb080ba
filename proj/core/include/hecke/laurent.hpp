#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

/// Integer Laurent polynomial in v, stored densely from its lowest exponent.
///
/// Canonical form: no zero coefficient at either end; the zero polynomial has
/// no coefficients at all, so equality is coefficient-wise.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  /// c * v^exponent.
  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly constant(Coeff c) { return monomial(c, 0); }
  /// Coefficients of v^low, v^(low+1), ...
  static LaurentPoly from_coeffs(int low, std::vector<Coeff> coeffs);
  /// Quantum integer [a] = v^(a-1) + v^(a-3) + ... + v^(1-a).
  static LaurentPoly quantum_integer(int a);
  /// [a]! = [1][2]...[a].
  static LaurentPoly quantum_factorial(int a);
  /// Parses forms such as "0", "v", "3v^2", "v^-1+1+v", "-2v^3".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient (undefined for zero).
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coeff(int exponent) const noexcept;
  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  LaurentPoly bar() const;
  bool is_bar_symmetric() const;
  /// Every term has positive exponent (membership in vZ[v]).
  bool in_v_lattice() const;
  /// Non-negative coefficients and no negative exponents.
  bool in_nonneg_polys() const;
  /// Membership in N_0[v + v^{-1}].
  bool in_nonneg_symmetric() const;

  Coeff eval_at_one() const;
  /// d/dv evaluated at v = 1.
  Coeff derivative_at_one() const;

  /// Exact division; returns false (leaving quotient unspecified) if the
  /// divisor does not divide this polynomial over the integers.
  bool divide_exact(const LaurentPoly& divisor, LaurentPoly& quotient) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Highest degree first, e.g. "3v^2", "v^2+1+v^-2", "0".
std::string to_string(const LaurentPoly& p);

}  // namespace hecke
