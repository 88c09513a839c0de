#pragma once

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"
#include "hlvir/lambda.hpp"
#include "hlvir/partition.hpp"
#include "hlvir/qcombination.hpp"
#include "hlvir/ratfunc.hpp"
#include "hlvir/vertex.hpp"

namespace hlvir {

/// phi_k(rho) = (1 - rho)(1 - rho^2)...(1 - rho^k)
UniPoly phi_poly(int k);

/// b_mu(rho) = prod_i phi_{m_i(mu)}(rho)
UniPoly b_poly(const Partition& mu);

/// c_mu(rho) as an element of Q(rho):
/// (-1)^{l-1} rho^{n(mu) - l(l-1)/2} phi_{l-1}(rho) / b_mu(rho), l = l(mu).
RatFunc c_coeff_generic(const Partition& mu);

/// Signed expansion of p_r s_lambda over border strips mu / lambda of size r.
QCombination<Rational> mn_expand(int r, const Partition& lambda);

/// Callback seeing each rewrite `from` -> `to` (every label produced by one rule).
using RewriteObserver = std::function<void(const LambdaVector& from, const std::vector<LambdaVector>& to)>;

/// Straightening and the power-sum expansions in the Q basis over one field.
/// Holds memo tables; use from one thread at a time.
template <CoeffField K>
class Structure {
 public:
  using F = typename K::value_type;
  using Combination = QCombination<F>;

  explicit Structure(K field) : field_(std::move(field)) {}

  [[nodiscard]] const K& field() const { return field_; }

  /// Reports every rule application made while filling the memo table.
  void set_observer(RewriteObserver observer) { observer_ = std::move(observer); }

  /// Rewrites Q_lambda as a combination of Q_mu with mu a partition.
  Combination straighten(const LambdaVector& lambda) {
    if (lambda.has_negative_tail_sum()) {
      notify(lambda, {});
      return {};
    }
    if (!lambda.empty() && lambda.parts().back() == 0) {
      std::vector<int> parts = lambda.parts();
      parts.pop_back();
      LambdaVector shorter(std::move(parts));
      notify(lambda, {shorter});
      return straighten(shorter);
    }
    int ascent = -1;
    for (int i = 0; i + 1 < lambda.length(); ++i) {
      if (lambda[i] < lambda[i + 1]) {
        ascent = i;
        break;
      }
    }
    if (ascent < 0) return Combination::single(lambda, field_.one());
    if (auto it = memo_.find(lambda); it != memo_.end()) return it->second;

    const int a = lambda[ascent];
    const int b = lambda[ascent + 1];
    const int r = b - a;
    const F rho = field_.rho();
    const F rho_sq_minus_one = rho * rho - field_.one();
    std::vector<std::pair<LambdaVector, F>> step;
    step.emplace_back(with_pair(lambda, ascent, b, a), rho);
    const int full = (r % 2 == 1) ? (r - 1) / 2 : r / 2 - 1;
    for (int i = 1; i <= full; ++i) {
      step.emplace_back(with_pair(lambda, ascent, b - i, a + i), rho_sq_minus_one * rho.pow(i - 1));
    }
    if (r % 2 == 0) {
      step.emplace_back(with_pair(lambda, ascent, b - r / 2, a + r / 2), rho.pow(r / 2 - 1) * (rho - field_.one()));
    }
    if (observer_) {
      std::vector<LambdaVector> targets;
      for (const auto& [label, c] : step) targets.push_back(label);
      observer_(lambda, targets);
    }
    Combination out;
    for (const auto& [label, c] : step) {
      if (c.is_zero()) continue;
      out.add_scaled(straighten(label), c);
    }
    memo_.emplace(lambda, out);
    return out;
  }

  /// c_mu(rho), computed in Q(rho) and then specialized.
  F c_coeff(const Partition& mu) {
    const std::string key = mu.to_string();
    if (auto it = c_memo_.find(key); it != c_memo_.end()) return it->second;
    F value = field_.zero();
    try {
      value = field_.specialize(c_coeff_generic(mu));
    } catch (const PoleError&) {
      throw SingularCoefficient("c_" + mu.to_string() + " is singular at rho = " + rho_text());
    }
    c_memo_.emplace(key, value);
    return value;
  }

  /// p_r = sum_{mu |- r} c_mu(rho) Q_mu
  Combination p_expand(int r) {
    check_power(r);
    Combination out;
    for (const auto& mu : partitions_of(r)) out.add(LambdaVector(mu), c_coeff(mu));
    return out;
  }

  /// p_r Q_lambda = sum_i Q_{lambda + r e_i} + sum_{mu |- r} c_mu(rho) Q_{(lambda, mu)}
  Combination multiply_p(int r, const LambdaVector& lambda) {
    check_power(r);
    Combination out;
    for (int i = 1; i <= lambda.length(); ++i) out.add(lambda.plus_at(i, r), field_.one());
    for (const auto& mu : partitions_of(r)) out.add(lambda.concat(LambdaVector(mu)), c_coeff(mu));
    return out;
  }

  /// Straightens every label of a combination.
  Combination straighten(const Combination& combination) {
    Combination out;
    for (const auto& [label, c] : combination.terms()) out.add_scaled(straighten(label), c);
    return out;
  }

 private:
  static LambdaVector with_pair(const LambdaVector& lambda, int i, int first, int second) {
    std::vector<int> parts = lambda.parts();
    parts[static_cast<std::size_t>(i)] = first;
    parts[static_cast<std::size_t>(i + 1)] = second;
    return LambdaVector(std::move(parts));
  }

  void notify(const LambdaVector& from, const std::vector<LambdaVector>& to) {
    if (observer_) observer_(from, to);
  }

  void check_power(int r) const {
    if (r < 1) throw InvalidArgument("power sum index must be at least 1");
    if (one_minus_rho_pow(field_, r).is_zero()) {
      throw SingularCoefficient("p_" + std::to_string(r) + " expansion refused: 1 - rho^" + std::to_string(r) +
                                " vanishes at rho = " + rho_text());
    }
  }

  [[nodiscard]] std::string rho_text() const {
    if constexpr (std::is_same_v<K, CyclotomicField>) {
      return "xi_" + std::to_string(field_.order());
    } else {
      return field_.rho().to_string();
    }
  }

  K field_;
  RewriteObserver observer_;
  std::unordered_map<LambdaVector, Combination, LambdaHash> memo_;
  std::map<std::string, F> c_memo_;
};

/// Expands a polynomial in the basis {Q_mu : mu partition} by Gauss-Jordan
/// elimination against the t_lambda coefficients, one degree at a time.
/// Offered only where rho is generic or rational.
template <CoeffField K>
  requires(!std::is_same_v<K, CyclotomicField>)
QCombination<typename K::value_type> expand_in_q_basis(const TPoly<typename K::value_type>& f, QEngine<K>& engine) {
  using F = typename K::value_type;
  const K& field = engine.field();
  QCombination<F> out;
  if (f.is_zero()) return out;
  for (int d = f.min_degree(); d <= f.degree(); ++d) {
    const auto monomials = monomials_of_degree(d);
    const auto shapes = partitions_of(d);
    const std::size_t n = shapes.size();
    // Column j holds Q_{shapes[j]}; row i the coefficient of monomials[i]; last column f.
    std::vector<std::vector<F>> m(n, std::vector<F>(n + 1, field.zero()));
    for (std::size_t j = 0; j < n; ++j) {
      const auto q = engine.hl_q(LambdaVector(shapes[j]));
      for (std::size_t i = 0; i < n; ++i) {
        if (const auto* c = q.find(monomials[i])) m[i][j] = *c;
      }
    }
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (const auto* c = f.find(monomials[i])) {
        m[i][n] = *c;
        any = true;
      }
    }
    if (!any) continue;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && m[pivot][col].is_zero()) ++pivot;
      if (pivot == n) throw InvalidArgument("Q basis is degenerate at rho = " + field.rho().to_string());
      std::swap(m[pivot], m[col]);
      const F inv = m[col][col].inverse();
      for (std::size_t k = col; k <= n; ++k) m[col][k] = m[col][k] * inv;
      for (std::size_t row = 0; row < n; ++row) {
        if (row == col || m[row][col].is_zero()) continue;
        const F factor = m[row][col];
        for (std::size_t k = col; k <= n; ++k) m[row][k] -= factor * m[col][k];
      }
    }
    for (std::size_t j = 0; j < n; ++j) out.add(LambdaVector(shapes[j]), m[j][n]);
  }
  return out;
}

}  // namespace hlvir
