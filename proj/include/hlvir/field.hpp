#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "hlvir/cyclotomic.hpp"
#include "hlvir/ratfunc.hpp"
#include "hlvir/rational.hpp"

namespace hlvir {

// A coefficient field together with the value it assigns to the parameter rho.
// Every algorithm above the scalar layer is written against this interface:
//   value_type        the scalar type
//   zero(), one(), from_rational(q)
//   rho()             the specialised parameter as a field element
//   specialize(f)     the limit of a rational function of rho (throws PoleError)
//   parse(text)       inverse of to_string on value_type

template <class K>
concept CoeffField = requires(const K& k, const typename K::value_type& x, const Rational& q, const RatFunc& f) {
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_rational(q) } -> std::same_as<typename K::value_type>;
  { k.rho() } -> std::same_as<typename K::value_type>;
  { k.specialize(f) } -> std::same_as<typename K::value_type>;
  { k.parse(std::string_view{}) } -> std::same_as<typename K::value_type>;
  { k.description() } -> std::same_as<std::string>;
  { x.is_zero() } -> std::convertible_to<bool>;
  { x.to_string() } -> std::same_as<std::string>;
  { x + x } -> std::same_as<typename K::value_type>;
  { x * x } -> std::same_as<typename K::value_type>;
  { x * q } -> std::same_as<typename K::value_type>;
};

/// Q with rho set to a rational number (rho = 0 gives Schur functions).
class RationalField {
 public:
  using value_type = Rational;

  explicit RationalField(Rational rho = Rational(0)) : rho_(std::move(rho)) {}

  [[nodiscard]] Rational zero() const { return Rational(0); }
  [[nodiscard]] Rational one() const { return Rational(1); }
  [[nodiscard]] Rational from_rational(const Rational& q) const { return q; }
  [[nodiscard]] Rational rho() const { return rho_; }
  [[nodiscard]] Rational specialize(const RatFunc& f) const { return specialize_at_rational(f, rho_); }
  [[nodiscard]] Rational parse(std::string_view text) const { return Rational::parse(text); }
  [[nodiscard]] std::string description() const { return "Q, rho = " + rho_.to_string(); }

 private:
  Rational rho_;
};

/// Q(xi_n) with rho = xi_n.
class CyclotomicField {
 public:
  using value_type = Cyclotomic;

  explicit CyclotomicField(int order) : ctx_(CyclotomicContext::make(order)) {}

  [[nodiscard]] int order() const { return ctx_->order(); }
  [[nodiscard]] const Cyclotomic::Context& context() const { return ctx_; }
  [[nodiscard]] Cyclotomic zero() const { return Cyclotomic(ctx_, Rational(0)); }
  [[nodiscard]] Cyclotomic one() const { return Cyclotomic(ctx_, Rational(1)); }
  [[nodiscard]] Cyclotomic from_rational(const Rational& q) const { return Cyclotomic(ctx_, q); }
  [[nodiscard]] Cyclotomic rho() const { return Cyclotomic::generator(ctx_); }
  [[nodiscard]] Cyclotomic specialize(const RatFunc& f) const { return specialize_at_root(f, ctx_); }
  [[nodiscard]] Cyclotomic parse(std::string_view text) const { return Cyclotomic::parse(text, ctx_); }
  [[nodiscard]] std::string description() const { return "Q(xi_" + std::to_string(order()) + "), rho = xi_" + std::to_string(order()); }

 private:
  Cyclotomic::Context ctx_;
};

/// Q(rho) with rho left as an indeterminate.
class RationalFunctionField {
 public:
  using value_type = RatFunc;

  [[nodiscard]] RatFunc zero() const { return RatFunc(0); }
  [[nodiscard]] RatFunc one() const { return RatFunc(1); }
  [[nodiscard]] RatFunc from_rational(const Rational& q) const { return RatFunc(q); }
  [[nodiscard]] RatFunc rho() const { return RatFunc::rho(); }
  [[nodiscard]] RatFunc specialize(const RatFunc& f) const { return f; }
  [[nodiscard]] RatFunc parse(std::string_view text) const { return RatFunc::parse(text); }
  [[nodiscard]] std::string description() const { return "Q(rho), generic rho"; }
};

static_assert(CoeffField<RationalField>);
static_assert(CoeffField<CyclotomicField>);
static_assert(CoeffField<RationalFunctionField>);

/// rho^k in the field (k may be negative when rho is invertible).
template <CoeffField K>
typename K::value_type rho_pow(const K& field, long k) {
  return field.rho().pow(k);
}

/// 1 - rho^k.
template <CoeffField K>
typename K::value_type one_minus_rho_pow(const K& field, long k) {
  return field.one() - field.rho().pow(k);
}

}  // namespace hlvir
