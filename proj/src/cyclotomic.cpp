#include "hlvir/cyclotomic.hpp"

#include "hlvir/errors.hpp"

namespace hlvir {

UniPoly cyclotomic_poly(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic_poly: order must be >= 1");
  UniPoly p = UniPoly::monomial(Rational(1), n) - UniPoly::constant(Rational(1));
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = UniPoly::exact_div(p, cyclotomic_poly(d));
  }
  return p;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicContext::CyclotomicContext(int order)
    : order_(order), dimension_(euler_phi(order)), modulus_(cyclotomic_poly(order)) {
  const int top = 2 * (dimension_ - 1);
  powers_.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    UniPoly r = UniPoly::rem(UniPoly::monomial(Rational(1), k), modulus_);
    std::vector<Rational> c(static_cast<std::size_t>(dimension_));
    for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
    powers_.push_back(std::move(c));
  }
}

std::shared_ptr<const CyclotomicContext> CyclotomicContext::make(int order) {
  if (order < 1) throw InvalidArgument("cyclotomic order must be >= 1");
  return std::make_shared<const CyclotomicContext>(order);
}

Cyclotomic::Cyclotomic(Context ctx, const Rational& value)
    : ctx_(std::move(ctx)), coords_(static_cast<std::size_t>(ctx_->dimension())) {
  coords_[0] = value;
}

Cyclotomic::Cyclotomic(Context ctx, std::vector<Rational> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ctx_->dimension()) {
    throw InvalidArgument("Cyclotomic: coordinate vector has wrong length");
  }
}

Cyclotomic Cyclotomic::from_poly(Context ctx, const UniPoly& p) {
  UniPoly r = UniPoly::rem(p, ctx->modulus());
  std::vector<Rational> c(static_cast<std::size_t>(ctx->dimension()));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
  return Cyclotomic(std::move(ctx), std::move(c));
}

Cyclotomic Cyclotomic::generator(Context ctx) { return from_poly(ctx, UniPoly::x()); }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coords_[0].is_one(); }

void Cyclotomic::check_same_field(const Cyclotomic& other) const {
  if (ctx_ != other.ctx_ && ctx_->order() != other.ctx_->order()) {
    throw FieldMismatch("cyclotomic fields Q(xi_" + std::to_string(ctx_->order()) + ") and Q(xi_" +
                        std::to_string(other.ctx_->order()) + ") do not mix");
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  const std::size_t d = coords_.size();
  if (d == 1) {
    coords_[0] *= rhs.coords_[0];
    return *this;
  }
  if (rhs.is_rational()) return *this *= rhs.coords_[0];
  std::vector<Rational> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coords_[j].is_zero()) continue;
      const Rational prod = coords_[i] * rhs.coords_[j];
      const auto& reduced = ctx_->power(static_cast<int>(i + j));
      for (std::size_t k = 0; k < d; ++k) {
        if (!reduced[k].is_zero()) out[k] += prod * reduced[k];
      }
    }
  }
  coords_ = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coords_) c *= rhs;
  return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_field(b);
  return a.coords_ == b.coords_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return Cyclotomic(ctx_, coords_[0].inverse());
  return from_poly(ctx_, UniPoly::inverse_mod(to_poly(), ctx_->modulus()));
}

Cyclotomic Cyclotomic::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclotomic result(ctx_, Rational(1));
  Cyclotomic base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Cyclotomic::to_string() const { return to_poly().to_string_ascending("z"); }

Cyclotomic Cyclotomic::parse(std::string_view text, Context ctx) {
  return from_poly(std::move(ctx), UniPoly::parse(text, "z"));
}

}  // namespace hlvir
