#pragma once

#include <string>
#include <string_view>

#include "hlvir/cyclotomic.hpp"
#include "hlvir/rational.hpp"
#include "hlvir/unipoly.hpp"

namespace hlvir {

/// Printed name of the indeterminate of Q(rho).
inline constexpr std::string_view kRhoSymbol = "ρ";

/// Element of Q(rho): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : den_(UniPoly::constant(Rational(1))) {}
  RatFunc(const Rational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(Rational(1))) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
  explicit RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(Rational(1))) {}
  RatFunc(UniPoly num, UniPoly den);

  /// The indeterminate rho.
  static RatFunc rho() { return RatFunc(UniPoly::x()); }

  [[nodiscard]] const UniPoly& num() const { return num_; }
  [[nodiscard]] const UniPoly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }

  [[nodiscard]] RatFunc inverse() const;
  [[nodiscard]] RatFunc pow(long exponent) const;

  /// "(num)" when den = 1, otherwise "(num)/(den)", both in descending powers of rho.
  [[nodiscard]] std::string to_string() const;
  static RatFunc parse(std::string_view text);

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator*=(const Rational& rhs);
  RatFunc& operator/=(const RatFunc& rhs) { return *this *= rhs.inverse(); }

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator*(RatFunc a, const Rational& b) { return a *= b; }
  friend RatFunc operator*(const Rational& b, RatFunc a) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void normalize();
  UniPoly num_;
  UniPoly den_;
};

/// lim_{rho -> xi_n} f(rho), cancelling factors of Phi_n shared by numerator
/// and denominator. Throws PoleError when the limit is infinite.
Cyclotomic specialize_at_root(const RatFunc& f, const Cyclotomic::Context& field);
Cyclotomic specialize_at_root(const RatFunc& f, int n);

/// lim_{rho -> r} f(rho), cancelling factors (rho - r). Throws PoleError on a pole.
Rational specialize_at_rational(const RatFunc& f, const Rational& r);

}  // namespace hlvir
