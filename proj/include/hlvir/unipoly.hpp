#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hlvir/rational.hpp"

namespace hlvir {

/// Dense univariate polynomial over the rationals; coefficient i multiplies x^i.
/// The highest stored coefficient is nonzero; the zero polynomial stores nothing.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<Rational> coefficients)
      : UniPoly(std::vector<Rational>(coefficients)) {}

  static UniPoly constant(const Rational& c);
  /// c * x^k
  static UniPoly monomial(const Rational& c, int k);
  static UniPoly x() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int i) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] UniPoly monic() const;
  [[nodiscard]] Rational eval(const Rational& at) const;
  /// x^shift * p(x); shift must be nonnegative.
  [[nodiscard]] UniPoly shifted(int shift) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  /// a / b, throwing if b does not divide a.
  static UniPoly exact_div(const UniPoly& a, const UniPoly& b);
  static UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }
  /// Monic greatest common divisor (zero only when both inputs are zero).
  static UniPoly gcd(UniPoly a, UniPoly b);
  /// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
  static UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

  /// Descending powers, e.g. "2*x^2 - x + 1/2"; unit coefficients are omitted.
  [[nodiscard]] std::string to_string(std::string_view symbol = "x") const;
  /// Ascending powers, e.g. "1/2 - x + 2*x^2".
  [[nodiscard]] std::string to_string_ascending(std::string_view symbol = "x") const;
  /// Accepts either ordering as produced by the to_string functions.
  static UniPoly parse(std::string_view text, std::string_view symbol = "x");

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace hlvir
