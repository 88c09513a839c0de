#include "hlvir/unipoly.hpp"

#include <algorithm>

#include "hlvir/errors.hpp"
#include "hlvir/text.hpp"

namespace hlvir {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw InvalidArgument("negative exponent in UniPoly::monomial");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::shifted(int shift) const {
  if (is_zero() || shift == 0) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(shift));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  UniPoly p;
  p.coeffs_ = std::move(v);
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational lead_inv = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    Rational q = top * lead_inv;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k - db)] = std::move(q);
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvalidArgument("UniPoly::exact_div: nonzero remainder");
  return q;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::inverse_mod(const UniPoly& a, const UniPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  UniPoly r0 = m;
  UniPoly r1 = rem(a, m);
  UniPoly s0;
  UniPoly s1 = constant(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DivisionByZero();
  return rem(s0 * r0.leading().inverse(), m);
}

namespace {

std::string power_text(const Rational& c, int k, std::string_view symbol) {
  std::string mono;
  if (k >= 1) mono = std::string(symbol);
  if (k >= 2) mono += "^" + std::to_string(k);
  if (mono.empty()) return c.to_string();
  if (c.is_one()) return mono;
  if (c == Rational(-1)) return "-" + mono;
  return c.to_string() + "*" + mono;
}

void append(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
  } else if (term.front() == '-') {
    out += " - " + term.substr(1);
  } else {
    out += " + " + term;
  }
}

}  // namespace

std::string UniPoly::to_string(std::string_view symbol) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (!c.is_zero()) append(out, power_text(c, k, symbol));
  }
  return out;
}

std::string UniPoly::to_string_ascending(std::string_view symbol) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (!c.is_zero()) append(out, power_text(c, k, symbol));
  }
  return out;
}

UniPoly UniPoly::parse(std::string_view input, std::string_view symbol) {
  UniPoly result;
  for (const auto& term : text::split_signed_terms(text::strip_parens(input))) {
    std::string_view body = term.body;
    Rational c(1);
    int k = 0;
    const auto pos = body.find(symbol);
    if (pos == std::string_view::npos) {
      c = Rational::parse(body);
    } else {
      std::string_view coeff_part = body.substr(0, pos);
      std::string_view power_part = body.substr(pos + symbol.size());
      if (!coeff_part.empty()) {
        if (coeff_part.back() != '*') throw InvalidArgument("malformed term '" + term.body + "'");
        coeff_part.remove_suffix(1);
        c = Rational::parse(coeff_part);
      }
      k = 1;
      if (!power_part.empty()) {
        if (power_part.front() != '^') throw InvalidArgument("malformed term '" + term.body + "'");
        k = static_cast<int>(Rational::parse(power_part.substr(1)).numerator().get_si());
        if (k < 0) throw InvalidArgument("negative exponent in '" + term.body + "'");
      }
    }
    if (term.negative) c = -c;
    result += monomial(c, k);
  }
  return result;
}

}  // namespace hlvir
