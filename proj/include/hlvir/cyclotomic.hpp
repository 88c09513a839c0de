#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hlvir/rational.hpp"
#include "hlvir/unipoly.hpp"

namespace hlvir {

/// The n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Phi_d for
/// every proper divisor d of n.
UniPoly cyclotomic_poly(int n);

/// Euler's totient.
int euler_phi(int n);

/// Shared, immutable description of Q(xi_n): the modulus Phi_n and the reduced
/// images of the powers x^k that a product of two reduced elements can reach.
class CyclotomicContext {
 public:
  static std::shared_ptr<const CyclotomicContext> make(int order);

  [[nodiscard]] int order() const { return order_; }
  [[nodiscard]] int dimension() const { return dimension_; }
  [[nodiscard]] const UniPoly& modulus() const { return modulus_; }
  /// Coordinates of x^k modulo Phi_n, for 0 <= k <= 2*(dimension-1).
  [[nodiscard]] const std::vector<Rational>& power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

  explicit CyclotomicContext(int order);

 private:
  int order_;
  int dimension_;
  UniPoly modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Element of the cyclotomic field Q(xi_n), stored in the power basis
/// 1, z, ..., z^(phi(n)-1) modulo Phi_n(z).
class Cyclotomic {
 public:
  using Context = std::shared_ptr<const CyclotomicContext>;

  Cyclotomic(Context ctx, const Rational& value);
  Cyclotomic(Context ctx, std::vector<Rational> coords);
  /// Reduces an arbitrary polynomial in z modulo Phi_n.
  static Cyclotomic from_poly(Context ctx, const UniPoly& p);
  /// The primitive root xi_n = z.
  static Cyclotomic generator(Context ctx);

  [[nodiscard]] int order() const { return ctx_->order(); }
  [[nodiscard]] const Context& context() const { return ctx_; }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;
  /// True when only the constant coordinate can be nonzero.
  [[nodiscard]] bool is_rational() const;
  [[nodiscard]] UniPoly to_poly() const { return UniPoly(coords_); }

  [[nodiscard]] Cyclotomic inverse() const;
  [[nodiscard]] Cyclotomic pow(long exponent) const;

  /// Ascending powers of z, e.g. "-1/2 + 1/2*z".
  [[nodiscard]] std::string to_string() const;
  static Cyclotomic parse(std::string_view text, Context ctx);

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  void check_same_field(const Cyclotomic& other) const;
  Context ctx_;
  std::vector<Rational> coords_;
};

}  // namespace hlvir
