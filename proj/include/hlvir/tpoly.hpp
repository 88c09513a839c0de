#pragma once

#include <map>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hlvir/monomial.hpp"
#include "hlvir/rational.hpp"
#include "hlvir/text.hpp"

namespace hlvir {

/// A finitely supported polynomial in t_1, t_2, ... with coefficients of type F.
/// Zero coefficients are never stored; iteration follows CanonicalOrder.
template <class F>
class TPoly {
 public:
  using Scalar = F;
  using Terms = std::map<Monomial, F, CanonicalOrder>;

  TPoly() = default;

  static TPoly constant(const F& c) { return term(Monomial(), c); }
  static TPoly term(const Monomial& m, const F& c) {
    TPoly p;
    p.add_term(m, c);
    return p;
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }

  /// Coefficient of m, if present.
  [[nodiscard]] const F* find(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Monomial& m, const F& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add_term(Monomial&& m, F&& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// this += c * shift * other
  void add_product(const TPoly& other, const F& c, const Monomial& shift) {
    if (c.is_zero()) return;
    for (const auto& [m, a] : other.terms_) add_term(m * shift, a * c);
  }

  TPoly& operator+=(const TPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  TPoly& operator-=(const TPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  TPoly& operator*=(const F& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
  }
  TPoly& operator*=(const Rational& c)
    requires(!std::is_same_v<F, Rational>)
  {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
  }

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator-(const TPoly& a) {
    TPoly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend TPoly operator*(TPoly a, const F& c) { return a *= c; }
  friend TPoly operator*(const F& c, TPoly a) { return a *= c; }
  friend TPoly operator*(TPoly a, const Rational& c)
    requires(!std::is_same_v<F, Rational>)
  {
    return a *= c;
  }
  friend TPoly operator*(const Rational& c, TPoly a)
    requires(!std::is_same_v<F, Rational>)
  {
    return a *= c;
  }
  friend TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    for (const auto& [mb, cb] : b.terms_) r.add_product(a, cb, mb);
    return r;
  }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }

  /// Largest weighted degree of a term (-1 for zero).
  [[nodiscard]] int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  [[nodiscard]] int min_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }
  [[nodiscard]] bool is_homogeneous() const { return degree() == min_degree(); }

  /// Indices r such that t_r occurs in some term.
  [[nodiscard]] std::set<int> variables() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_) {
      const auto& e = m.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) vars.insert(static_cast<int>(i + 1));
      }
    }
    return vars;
  }
  [[nodiscard]] bool involves(int index) const {
    for (const auto& [m, c] : terms_) {
      if (m.exponent(index) != 0) return true;
    }
    return false;
  }

  /// d/dt_index
  [[nodiscard]] TPoly derivative(int index) const {
    TPoly r;
    if (index < 1) return r;
    for (const auto& [m, c] : terms_) {
      const int e = m.exponent(index);
      if (e == 0) continue;
      r.add_term(m.times_variable(index, -1), c * Rational(e));
    }
    return r;
  }

  /// t_index * this
  [[nodiscard]] TPoly times_variable(int index) const {
    TPoly r;
    if (index < 1) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m.times_variable(index), c);
    return r;
  }

  /// Applies `fn` to every coefficient, e.g. to embed into a larger field.
  template <class G, class Fn>
  [[nodiscard]] TPoly<G> map_coefficients(Fn&& fn) const {
    TPoly<G> r;
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  /// Canonical text: "1/2*t1^2 - 1*t2"; "0" for the zero polynomial.
  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) text::append_term(out, c.to_string(), m.to_string());
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace hlvir
