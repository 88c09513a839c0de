#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"
#include "hlvir/lambda.hpp"
#include "hlvir/qcombination.hpp"
#include "hlvir/tpoly.hpp"

namespace hlvir {

struct CacheOptions {
  bool enabled = true;
  /// The Q_lambda table is dropped wholesale once it holds this many entries.
  std::size_t max_entries = 200000;

  /// Defaults, with max_entries overridden by HLVIR_CACHE_SIZE (0 disables caching).
  static CacheOptions from_environment();
};

/// Part of B_m f coming from the annihilation factor: index j holds the
/// coefficient of u^{-j} in exp(-sum_k (1/k) d/dt_k u^{-k}) f, i.e. the result
/// of substituting t_k -> t_k - u^{-k}/k.
template <class F>
std::vector<TPoly<F>> annihilation_parts(const TPoly<F>& f) {
  std::vector<TPoly<F>> parts(static_cast<std::size_t>(std::max(f.degree(), 0) + 1));
  for (const auto& [m, c] : f.terms()) {
    const std::vector<int>& e = m.exponents();
    // Enumerate sub-exponent vectors a <= e; a_k copies of t_k are replaced by -u^{-k}/k.
    std::vector<int> a(e.size(), 0);
    while (true) {
      Rational weight(1);
      int j = 0;
      std::vector<int> rest(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        rest[i] = e[i] - a[i];
        if (a[i] == 0) continue;
        const long k = static_cast<long>(i + 1);
        weight *= binomial(e[i], a[i]) * Rational(-1, k).pow(a[i]);
        j += static_cast<int>(k) * a[i];
      }
      parts[static_cast<std::size_t>(j)].add_term(Monomial(std::move(rest)), c * weight);
      std::size_t i = 0;
      while (i < e.size() && a[i] == e[i]) a[i++] = 0;
      if (i == e.size()) break;
      ++a[i];
    }
  }
  return parts;
}

/// Vertex operators B_m and Hall-Littlewood polynomials Q_lambda over one
/// coefficient field. Holds mutable caches, so one engine should be used by
/// one thread at a time.
template <CoeffField K>
class QEngine {
 public:
  using Field = K;
  using F = typename K::value_type;
  using Poly = TPoly<F>;

  explicit QEngine(K field, CacheOptions options = CacheOptions::from_environment())
      : field_(std::move(field)), options_(options) {}

  [[nodiscard]] const K& field() const { return field_; }
  [[nodiscard]] const CacheOptions& cache_options() const { return options_; }
  [[nodiscard]] std::size_t cache_size() const { return q_cache_.size(); }
  void clear_cache() { q_cache_.clear(); }

  /// Coefficient of u^i in exp(sum_k (1 - rho^k) t_k u^k).
  const Poly& creation(int i) {
    static const Poly zero;
    if (i < 0) return zero;
    while (static_cast<int>(h_.size()) <= i) {
      const int next = static_cast<int>(h_.size());
      if (next == 0) {
        h_.push_back(Poly::constant(field_.one()));
        continue;
      }
      // next * h_next = sum_k k (1 - rho^k) t_k h_{next-k}
      Poly sum;
      for (int k = 1; k <= next; ++k) {
        const F c = one_minus_rho_pow(field_, k) * Rational(k, next);
        if (c.is_zero()) continue;
        sum += h_[static_cast<std::size_t>(next - k)].times_variable(k) * c;
      }
      h_.push_back(std::move(sum));
    }
    return h_[static_cast<std::size_t>(i)];
  }

  /// Coefficient of u^m in B(u) f.
  Poly apply_B(int m, const Poly& f) {
    Poly out;
    if (f.is_zero()) return out;
    const auto parts = annihilation_parts(f);
    for (int j = std::max(0, -m); j < static_cast<int>(parts.size()); ++j) {
      const auto& part = parts[static_cast<std::size_t>(j)];
      if (part.is_zero()) continue;
      out += creation(m + j) * part;
    }
    return out;
  }

  /// Q_lambda = B_{lambda_1} ... B_{lambda_l} 1, memoized on suffixes.
  Poly hl_q(const LambdaVector& lambda) {
    std::vector<int> parts = lambda.parts();
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    LambdaVector key(std::move(parts));
    if (key.has_negative_tail_sum()) return Poly();
    return q_rec(key);
  }

  /// sum_lambda c_lambda Q_lambda
  Poly evaluate(const QCombination<F>& combination) {
    Poly out;
    for (const auto& [label, c] : combination.terms()) {
      if (label.has_negative_tail_sum()) continue;
      out += hl_q(label) * c;
    }
    return out;
  }

  /// t_r^perp f = (1/(r(1 - rho^r))) df/dt_r
  Poly perp_t(int r, const Poly& f) const {
    if (r < 1) throw InvalidArgument("perp_t needs r >= 1");
    const F d = one_minus_rho_pow(field_, r);
    if (d.is_zero()) throw AdjointUndefined("t_" + std::to_string(r) + "^perp undefined: 1 - rho^" + std::to_string(r) + " = 0");
    return f.derivative(r) * (d.inverse() * Rational(1, r));
  }

  /// p_k^perp Q_lambda = sum_i Q_{lambda - k e_i}, as a formal combination.
  QCombination<F> perp_p(int k, const LambdaVector& lambda) const {
    if (k < 1) throw InvalidArgument("perp_p needs k >= 1");
    if (one_minus_rho_pow(field_, k).is_zero()) {
      throw AdjointUndefined("p_" + std::to_string(k) + "^perp undefined: 1 - rho^" + std::to_string(k) + " = 0");
    }
    QCombination<F> out;
    for (int i = 1; i <= lambda.length(); ++i) out.add(lambda.plus_at(i, -k), field_.one());
    return out;
  }

 private:
  Poly q_rec(const LambdaVector& key) {
    if (key.empty()) return Poly::constant(field_.one());
    if (options_.enabled) {
      auto it = q_cache_.find(key);
      if (it != q_cache_.end()) return it->second;
    }
    Poly inner = q_rec(key.tail());
    Poly result = inner.is_zero() ? Poly() : apply_B(key[0], inner);
    if (options_.enabled) {
      if (q_cache_.size() >= options_.max_entries) q_cache_.clear();
      q_cache_.emplace(key, result);
    }
    return result;
  }

  K field_;
  CacheOptions options_;
  std::vector<Poly> h_;
  std::unordered_map<LambdaVector, Poly, LambdaHash> q_cache_;
};

}  // namespace hlvir
