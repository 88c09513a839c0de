#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"
#include "hlvir/tpoly.hpp"

namespace hlvir {

enum class PrimitiveKind { Mul, Der };

/// Multiply by t_index, or differentiate with respect to t_index (index >= 1).
struct Primitive {
  PrimitiveKind kind;
  int index;

  static Primitive mul(int a) { return {PrimitiveKind::Mul, a}; }
  static Primitive der(int a) { return {PrimitiveKind::Der, a}; }
  friend bool operator==(const Primitive&, const Primitive&) = default;
};

/// coefficient * factors[0] * factors[1] * ..., the last factor acting first.
template <class F>
struct OpTerm {
  F coefficient;
  std::vector<Primitive> factors;

  [[nodiscard]] std::string to_string() const {
    std::string suffix;
    for (const auto& p : factors) {
      if (!suffix.empty()) suffix += "*";
      suffix += (p.kind == PrimitiveKind::Mul ? "t" : "d") + std::to_string(p.index);
    }
    std::string out;
    text::append_term(out, coefficient.to_string(), suffix);
    return out;
  }
};

/// Factor whose index is k + offset for the family member k.
struct FactorPattern {
  PrimitiveKind kind;
  int offset;
};

/// The family k -> scale * (k if weighted) * prod_j factor_j(k + offset_j), for
/// k >= k_min (and k <= k_max when given), skipping k divisible by skip_divisor
/// when that is nonzero. Families without a derivative factor must be bounded.
template <class F>
struct FamilyRule {
  F scale;
  bool weight_by_k = false;
  std::vector<FactorPattern> factors;
  int k_min = 1;
  std::optional<int> k_max;
  int skip_divisor = 0;

  /// Members that can act nontrivially on a polynomial whose largest variable index is `bound`.
  [[nodiscard]] std::vector<OpTerm<F>> instantiate(int bound) const {
    int hi = k_max.value_or(0);
    bool has_der = false;
    for (const auto& f : factors) {
      if (f.kind != PrimitiveKind::Der) continue;
      hi = has_der ? std::min(hi, bound - f.offset) : (k_max ? std::min(*k_max, bound - f.offset) : bound - f.offset);
      has_der = true;
    }
    if (!has_der && !k_max) throw InvalidArgument("unbounded family without a derivative factor");
    int lo = k_min;
    for (const auto& f : factors) lo = std::max(lo, 1 - f.offset);  // t_j = 0 and d/dt_j = 0 for j <= 0
    std::vector<OpTerm<F>> out;
    for (int k = lo; k <= hi; ++k) {
      if (skip_divisor != 0 && k % skip_divisor == 0) continue;
      OpTerm<F> term{weight_by_k ? scale * Rational(k) : scale, {}};
      for (const auto& f : factors) term.factors.push_back({f.kind, k + f.offset});
      out.push_back(std::move(term));
    }
    return out;
  }
};

/// A linear operator on TPoly<F>: a finite list of terms plus lazily
/// instantiated infinite families.
template <class F>
class LinOperator {
 public:
  LinOperator() = default;

  static LinOperator scalar(const F& c) {
    LinOperator op;
    op.add_term(c, {});
    return op;
  }

  void add_term(const F& c, std::vector<Primitive> factors) {
    if (factors.size() > 2) throw InvalidArgument("operator terms have at most two factors");
    for (const auto& p : factors) {
      if (p.index < 1) return;  // t_j = 0 and d/dt_j = 0 for j <= 0
    }
    if (c.is_zero()) return;
    terms_.push_back({c, std::move(factors)});
  }
  void add_family(FamilyRule<F> rule) {
    if (rule.factors.size() > 2) throw InvalidArgument("operator terms have at most two factors");
    families_.push_back(std::move(rule));
  }

  [[nodiscard]] const std::vector<OpTerm<F>>& terms() const { return terms_; }
  [[nodiscard]] const std::vector<FamilyRule<F>>& families() const { return families_; }

  /// All terms that can act nontrivially on polynomials in t_1..t_bound.
  [[nodiscard]] std::vector<OpTerm<F>> instantiate(int bound) const {
    std::vector<OpTerm<F>> out = terms_;
    for (const auto& fam : families_) {
      auto members = fam.instantiate(bound);
      out.insert(out.end(), members.begin(), members.end());
    }
    return out;
  }

  [[nodiscard]] TPoly<F> apply(const TPoly<F>& f) const {
    TPoly<F> out;
    if (f.is_zero()) return out;
    int bound = 0;
    for (const auto& [m, c] : f.terms()) bound = std::max(bound, m.max_variable());
    const auto ops = instantiate(bound);
    for (const auto& [m, c] : f.terms()) {
      for (const auto& op : ops) {
        auto image = act(op.factors, m);
        if (!image) continue;
        out.add_term(std::move(image->first), c * op.coefficient * image->second);
      }
    }
    return out;
  }

  LinOperator& operator+=(const LinOperator& rhs) {
    terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    families_.insert(families_.end(), rhs.families_.begin(), rhs.families_.end());
    return *this;
  }
  LinOperator& operator*=(const F& c) {
    for (auto& t : terms_) t.coefficient = t.coefficient * c;
    for (auto& fam : families_) fam.scale = fam.scale * c;
    return *this;
  }
  friend LinOperator operator+(LinOperator a, const LinOperator& b) { return a += b; }
  friend LinOperator operator*(const F& c, LinOperator a) { return a *= c; }

  /// Finite terms, then each family as a generic member.
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (const auto& t : terms_) text::append_term(out, t.coefficient.to_string(), suffix_of(t.factors));
    for (const auto& fam : families_) {
      std::string suffix = fam.weight_by_k ? "k" : "";
      for (const auto& p : fam.factors) {
        if (!suffix.empty()) suffix += "*";
        suffix += (p.kind == PrimitiveKind::Mul ? "t" : "d") + index_text(p.offset);
      }
      std::string range = "k>=" + std::to_string(fam.k_min);
      if (fam.k_max) range += ", k<=" + std::to_string(*fam.k_max);
      if (fam.skip_divisor) range += ", " + std::to_string(fam.skip_divisor) + "!|k";
      text::append_term(out, fam.scale.to_string(), "sum[" + range + "](" + suffix + ")");
    }
    return out.empty() ? "0" : out;
  }

  /// Image of a monomial under a product of primitives: (monomial, multiplier),
  /// or nothing when the product annihilates it.
  static std::optional<std::pair<Monomial, Rational>> act(const std::vector<Primitive>& factors, const Monomial& m) {
    std::vector<int> e = m.exponents();
    long mult = 1;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      const auto idx = static_cast<std::size_t>(it->index - 1);
      if (it->kind == PrimitiveKind::Der) {
        if (idx >= e.size() || e[idx] == 0) return std::nullopt;
        mult *= e[idx];
        --e[idx];
      } else {
        if (idx >= e.size()) e.resize(idx + 1, 0);
        ++e[idx];
      }
    }
    return std::make_pair(Monomial(std::move(e)), Rational(mult));
  }

 private:
  static std::string index_text(int offset) {
    if (offset == 0) return "{k}";
    return "{k" + std::string(offset > 0 ? "+" : "-") + std::to_string(offset > 0 ? offset : -offset) + "}";
  }
  static std::string suffix_of(const std::vector<Primitive>& factors) {
    std::string s;
    for (const auto& p : factors) {
      if (!s.empty()) s += "*";
      s += (p.kind == PrimitiveKind::Mul ? "t" : "d") + std::to_string(p.index);
    }
    return s;
  }

  std::vector<OpTerm<F>> terms_;
  std::vector<FamilyRule<F>> families_;
};

template <class F>
TPoly<F> apply(const LinOperator<F>& op, const TPoly<F>& f) {
  return op.apply(f);
}

/// A(B(f)) - B(A(f))
template <class F>
TPoly<F> commutator_apply(const LinOperator<F>& a, const LinOperator<F>& b, const TPoly<F>& f) {
  return a.apply(b.apply(f)) - b.apply(a.apply(f));
}

/// The degree operator sum_{k>=1} k t_k d/dt_k.
template <CoeffField K>
LinOperator<typename K::value_type> grading_operator(const K& field) {
  LinOperator<typename K::value_type> op;
  op.add_family({field.one(), true, {{PrimitiveKind::Mul, 0}, {PrimitiveKind::Der, 0}}});
  return op;
}

/// <t_lambda, t_lambda> = z_lambda(rho) / prod_i lambda_i^2, where
/// z_lambda(rho) = prod_k k^{m_k} m_k! / prod_i (1 - rho^{lambda_i}).
template <CoeffField K>
typename K::value_type monomial_norm(const K& field, const Monomial& m) {
  Rational numerator(1);
  auto denominator = field.one();
  const auto& e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    const long k = static_cast<long>(i + 1);
    numerator *= Rational(k).pow(e[i]) * factorial(e[i]) / Rational(k * k).pow(e[i]);
    const auto factor = one_minus_rho_pow(field, k);
    if (factor.is_zero()) {
      throw DegeneratePairing("pairing degenerate: 1 - rho^" + std::to_string(k) + " vanishes");
    }
    denominator = denominator * factor.pow(e[i]);
  }
  return denominator.inverse() * numerator;
}

/// The scalar product making t_r and (1/(r(1-rho^r))) d/dt_r adjoint.
template <CoeffField K>
typename K::value_type inner_product(const TPoly<typename K::value_type>& f, const TPoly<typename K::value_type>& g,
                                     const K& field) {
  auto sum = field.zero();
  for (const auto& [m, c] : f.terms()) {
    const auto norm = monomial_norm(field, m);
    if (const auto* d = g.find(m)) sum += c * *d * norm;
  }
  for (const auto& [m, c] : g.terms()) (void)monomial_norm(field, m);
  return sum;
}

}  // namespace hlvir
