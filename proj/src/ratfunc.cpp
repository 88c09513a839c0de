#include "hlvir/ratfunc.hpp"

#include "hlvir/errors.hpp"
#include "hlvir/text.hpp"

namespace hlvir {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UniPoly::constant(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    UniPoly g = UniPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = UniPoly::exact_div(num_, g);
      den_ = UniPoly::exact_div(den_, g);
    }
  }
  if (!den_.leading().is_one()) {
    const Rational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ += rhs.num_;
    return *this;
  }
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  num_ = num_ * rhs.num_;
  den_ = den_ * rhs.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const Rational& rhs) {
  num_ *= rhs;
  if (num_.is_zero()) den_ = UniPoly::constant(Rational(1));
  return *this;
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r = a;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RatFunc result(1);
  RatFunc base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string RatFunc::to_string() const {
  std::string out = "(" + num_.to_string(kRhoSymbol) + ")";
  if (!den_.is_one()) out += "/(" + den_.to_string(kRhoSymbol) + ")";
  return out;
}

RatFunc RatFunc::parse(std::string_view input) {
  const auto parts = text::split_top_level(text::trim(input), '/');
  // A bare rational "a/b" splits into two plain numbers.
  if (parts.size() == 2 && parts[0].find('(') == std::string::npos) {
    return RatFunc(Rational::parse(input));
  }
  if (parts.size() == 1) return RatFunc(UniPoly::parse(parts[0], kRhoSymbol));
  if (parts.size() == 2) {
    return RatFunc(UniPoly::parse(parts[0], kRhoSymbol), UniPoly::parse(parts[1], kRhoSymbol));
  }
  throw InvalidArgument("malformed rational function '" + std::string(input) + "'");
}

Cyclotomic specialize_at_root(const RatFunc& f, const Cyclotomic::Context& field) {
  const UniPoly& phi = field->modulus();
  UniPoly num = f.num();
  UniPoly den = f.den();
  for (;;) {
    auto [num_q, num_r] = UniPoly::divmod(num, phi);
    auto [den_q, den_r] = UniPoly::divmod(den, phi);
    if (!den_r.is_zero()) {
      return Cyclotomic::from_poly(field, num_r) / Cyclotomic::from_poly(field, den_r);
    }
    if (!num_r.is_zero()) {
      throw PoleError("pole at xi_" + std::to_string(field->order()) + " of " + f.to_string());
    }
    num = std::move(num_q);
    den = std::move(den_q);
  }
}

Cyclotomic specialize_at_root(const RatFunc& f, int n) { return specialize_at_root(f, CyclotomicContext::make(n)); }

Rational specialize_at_rational(const RatFunc& f, const Rational& r) {
  const UniPoly linear({-r, Rational(1)});
  UniPoly num = f.num();
  UniPoly den = f.den();
  for (;;) {
    const Rational den_value = den.eval(r);
    if (!den_value.is_zero()) return num.eval(r) / den_value;
    if (!num.eval(r).is_zero()) {
      throw PoleError("pole at " + r.to_string() + " of " + f.to_string());
    }
    num = UniPoly::exact_div(num, linear);
    den = UniPoly::exact_div(den, linear);
  }
}

}  // namespace hlvir
