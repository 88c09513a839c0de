#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"
#include "hlvir/linop.hpp"
#include "hlvir/qcombination.hpp"
#include "hlvir/structure.hpp"

namespace hlvir {

enum class OperatorFamily {
  L,       // L_m^(n)
  Lhat,    // sum_{k>=1} k t_k d/dt_{k+mn}
  Ltilde,  // Lhat + W/2
  W,       // sum_{k=1}^{mn-1} d^2/dt_k dt_{mn-k}
  V,       // sum_{k=1, n!|k}^{mn-1} p_k p_{mn-k}
  LS,      // L_m^S with its quadratic tail for m < 0
  LShat,   // sum_{k>=1} k t_k d/dt_{k+m}
  WS,      // second-order part of L_m^S (derivatives for m >= 0, products for m < 0)
};

struct VirasoroSpec {
  OperatorFamily family = OperatorFamily::L;
  int n = 0;  // unused by the Schur families
  int m = 0;

  /// Parses "L:n=2,m=-1", "LS:m=3", ...
  static VirasoroSpec parse(std::string_view text);
  [[nodiscard]] std::string to_string() const;
  /// Throws InvalidArgument when the parameters are outside the family's range.
  void validate() const;
};

std::string_view family_name(OperatorFamily family);

/// The operator described by `spec`, with coefficients embedded in `field`.
template <CoeffField K>
LinOperator<typename K::value_type> build_operator(const VirasoroSpec& spec, const K& field) {
  using F = typename K::value_type;
  spec.validate();
  const int n = spec.n;
  const int m = spec.m;
  auto q = [&](long num, long den = 1) { return field.from_rational(Rational(num, den)); };
  LinOperator<F> op;

  auto first_order = [&](int shift, int skip) {
    op.add_family({q(1), true, {{PrimitiveKind::Mul, 0}, {PrimitiveKind::Der, shift}}, 1, std::nullopt, skip});
  };
  auto second_derivatives = [&](int total, int skip, const F& scale) {
    for (int k = 1; k <= total - 1; ++k) {
      if (skip && k % skip == 0) continue;
      op.add_term(scale, {Primitive::der(k), Primitive::der(total - k)});
    }
  };
  // sum_k scale * k (total - k) t_k t_{total-k}, i.e. scale * p_k p_{total-k}
  auto power_products = [&](int total, int skip, const Rational& scale) {
    for (int k = 1; k <= total - 1; ++k) {
      if (skip && k % skip == 0) continue;
      op.add_term(field.from_rational(scale * Rational(static_cast<long>(k) * (total - k))),
                  {Primitive::mul(k), Primitive::mul(total - k)});
    }
  };

  switch (spec.family) {
    case OperatorFamily::L:
      first_order(n * m, n);
      if (m > 0) second_derivatives(m * n, n, q(1, 2));
      // -1/2 k (mn + k) t_k t_{-mn-k} = 1/2 k (-mn - k) t_k t_{-mn-k}
      if (m < 0) power_products(-m * n, n, Rational(1, 2));
      if (m == 0) op.add_term(q(static_cast<long>(n) * n - 1, 24), {});
      break;
    case OperatorFamily::Lhat:
      first_order(n * m, 0);
      break;
    case OperatorFamily::Ltilde:
      first_order(n * m, 0);
      second_derivatives(m * n, 0, q(1, 2));
      break;
    case OperatorFamily::W:
      second_derivatives(m * n, 0, q(1));
      break;
    case OperatorFamily::V:
      power_products(m * n, n, Rational(1));
      break;
    case OperatorFamily::LS:
      first_order(m, 0);
      if (m > 0) second_derivatives(m, 0, q(1, 2));
      if (m < 0) power_products(-m, 0, Rational(1, 2));
      break;
    case OperatorFamily::LShat:
      first_order(m, 0);
      break;
    case OperatorFamily::WS:
      if (m >= 0) second_derivatives(m, 0, q(1));
      if (m < 0) power_products(-m, 0, Rational(1));
      break;
  }
  return op;
}

/// lambda - a e_i - b e_j (1-based indices)
inline LambdaVector shift2(const LambdaVector& lambda, int i, int a, int j, int b) {
  return lambda.plus_at(i, a).plus_at(j, b);
}

/// L_m^(n) Q_lambda at rho = xi_n for m >= 0:
/// sum_i lambda_i Q_{lambda - mn e_i}
///   + sum_{k=1}^{mn-1} sum_{i>j} (1 - xi^{-k}) Q_{lambda - k e_i - (mn-k) e_j}
///   + delta_{m,0} (n^2-1)/24 Q_lambda
template <CoeffField K>
QCombination<typename K::value_type> rhs_positive(const K& field, int n, int m, const LambdaVector& lambda) {
  if (n < 2 || m < 0) throw InvalidArgument("positive branch needs n >= 2 and m >= 0");
  QCombination<typename K::value_type> out;
  const int l = lambda.length();
  const int mn = m * n;
  for (int i = 1; i <= l; ++i) out.add(lambda.plus_at(i, -mn), field.from_rational(Rational(lambda[i - 1])));
  for (int k = 1; k <= mn - 1; ++k) {
    const auto c = field.one() - rho_pow(field, -k);
    for (int i = 2; i <= l; ++i) {
      for (int j = 1; j < i; ++j) out.add(shift2(lambda, i, -k, j, k - mn), c);
    }
  }
  if (m == 0) out.add(lambda, field.from_rational(Rational(static_cast<long>(n) * n - 1, 24)));
  return out;
}

/// Terms shared by the negative-branch expansions. For each k in [1, mn-1] with n !| k:
///   pairs:  sum_{i>j} Q_{lambda + k e_i + (mn-k) e_j}
///   single: sum_i sum_{mu |- k} c_mu Q_{(lambda + (mn-k) e_i, mu)}
///   tails:  sum_{mu |- k} sum_j c_mu Q_{(lambda, mu + (mn-k) e_j)} + sum_{mu |- k, nu |- mn-k} c_mu c_nu Q_{(lambda, mu, nu)}
template <CoeffField K>
struct NegativeBranchTerms {
  using F = typename K::value_type;
  Structure<K>& structure;
  int n;
  int m;
  const LambdaVector& lambda;

  QCombination<F> pairs(int k) const {
    QCombination<F> out;
    const int mn = m * n;
    for (int i = 2; i <= lambda.length(); ++i) {
      for (int j = 1; j < i; ++j) out.add(shift2(lambda, i, k, j, mn - k), structure.field().one());
    }
    return out;
  }
  QCombination<F> single(int k) const {
    QCombination<F> out;
    const int mn = m * n;
    for (int i = 1; i <= lambda.length(); ++i) {
      const auto shifted = lambda.plus_at(i, mn - k);
      for (const auto& mu : partitions_of(k)) out.add(shifted.concat(LambdaVector(mu)), structure.c_coeff(mu));
    }
    return out;
  }
  QCombination<F> tails(int k) const {
    QCombination<F> out;
    const int rest = m * n - k;
    for (const auto& mu : partitions_of(k)) {
      const auto c = structure.c_coeff(mu);
      const LambdaVector mu_vec(mu);
      for (int j = 1; j <= mu.length(); ++j) out.add(lambda.concat(mu_vec.plus_at(j, rest)), c);
      for (const auto& nu : partitions_of(rest)) {
        out.add(lambda.concat(mu_vec).concat(LambdaVector(nu)), c * structure.c_coeff(nu));
      }
    }
    return out;
  }
};

/// L_{-m}^(n) Q_lambda at rho = xi_n for m >= 1.
template <CoeffField K>
QCombination<typename K::value_type> rhs_negative(Structure<K>& structure, int n, int m, const LambdaVector& lambda) {
  if (n < 2 || m < 1) throw InvalidArgument("negative branch needs n >= 2 and m >= 1");
  using F = typename K::value_type;
  const K& field = structure.field();
  const NegativeBranchTerms<K> terms{structure, n, m, lambda};
  QCombination<F> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    out.add(lambda.plus_at(i, m * n), field.from_rational(Rational(lambda[i - 1]) + Rational(m * (n - 1), 2)));
  }
  for (int k = 1; k <= m * n - 1; ++k) {
    if (k % n == 0) continue;
    const auto xik = rho_pow(field, k);
    out.add_scaled(terms.pairs(k), xik);
    out.add_scaled(terms.single(k), xik);
    out.add_scaled(terms.tails(k), field.from_rational(Rational(1, 2)));
  }
  return out;
}

/// Lhat_{-m}^(n) Q_lambda at rho = xi_n for m >= 1. Terms with n | k carry the
/// factor xi^k - 1 = 0 and are skipped (their c_mu may be singular).
template <CoeffField K>
QCombination<typename K::value_type> rhs_negative_first_order(Structure<K>& structure, int n, int m,
                                                               const LambdaVector& lambda) {
  if (n < 2 || m < 1) throw InvalidArgument("negative branch needs n >= 2 and m >= 1");
  using F = typename K::value_type;
  const K& field = structure.field();
  const NegativeBranchTerms<K> terms{structure, n, m, lambda};
  QCombination<F> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    out.add(lambda.plus_at(i, m * n), field.from_rational(Rational(lambda[i - 1])));
  }
  for (int k = 1; k <= m * n; ++k) {
    const auto c = rho_pow(field, k) - field.one();
    if (c.is_zero()) continue;
    out.add_scaled(terms.pairs(k), c);
    out.add_scaled(terms.single(k), c);
  }
  return out;
}

/// V_m^(n) Q_lambda at rho = xi_n for m >= 1, via the multiplication formula applied twice.
template <CoeffField K>
QCombination<typename K::value_type> rhs_power_products(Structure<K>& structure, int n, int m,
                                                         const LambdaVector& lambda) {
  if (n < 2 || m < 1) throw InvalidArgument("V_m needs n >= 2 and m >= 1");
  using F = typename K::value_type;
  const K& field = structure.field();
  const NegativeBranchTerms<K> terms{structure, n, m, lambda};
  QCombination<F> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    out.add(lambda.plus_at(i, m * n), field.from_rational(Rational(m * (n - 1))));
  }
  const F two = field.from_rational(Rational(2));
  for (int k = 1; k <= m * n - 1; ++k) {
    if (k % n == 0) continue;
    out += terms.tails(k);
    out.add_scaled(terms.pairs(k), two);
    out.add_scaled(terms.single(k), two);
  }
  return out;
}

/// L_m^S s_lambda for m >= 1: sum_i (lambda_i - (2i + m - 1)/2) s_{lambda - m e_i}.
QCombination<Rational> rhs_schur_positive(int m, const LambdaVector& lambda);

/// L_{-m}^S s_lambda for m >= 1:
/// sum_i (lambda_i - i + (m+1)/2) s_{lambda + m e_i} - sum_{k=1}^m (-1)^{m-k} (l - k + (m+1)/2) s_{(lambda, k, 1^{m-k})}.
QCombination<Rational> rhs_schur_negative(int m, const LambdaVector& lambda);

/// L_{-m}^S 1 = sum_{k=1}^m (-1)^{m-k+1} (-k + (m+1)/2) s_{(k, 1^{m-k})}.
QCombination<Rational> rhs_schur_vacuum(int m);

/// sum_{k=1}^m (-1)^{m-k} (2k - m - 1) s_{(k, 1^{m-k})}, which equals sum_{k=1}^{m-1} p_k p_{m-k}.
QCombination<Rational> rhs_hook_products(int m);

}  // namespace hlvir
