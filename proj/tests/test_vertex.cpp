#include <gtest/gtest.h>

#include <functional>

#include "hlvir/partition.hpp"
#include "hlvir/rho.hpp"
#include "hlvir/vertex.hpp"

using namespace hlvir;

namespace {

// q_r = sum over partitions mu of r of prod_i ((1 - rho^i) t_i)^{m_i} / m_i!, built
// directly from the partition list rather than through the engine's recursion.
template <CoeffField K>
TPoly<typename K::value_type> one_row(const K& field, int r) {
  using F = typename K::value_type;
  TPoly<F> out;
  if (r < 0) return out;
  for (const auto& mu : partitions_of(r)) {
    F c = field.one();
    for (int i = 1; i <= r; ++i) {
      const int mi = mu.multiplicity(i);
      if (mi == 0) continue;
      c = c * one_minus_rho_pow(field, i).pow(mi) * factorial(mi).inverse();
    }
    out.add_term(Monomial::from_parts(mu.parts()), c);
  }
  return out;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}) at rho = 0, for any integer vector.
TPoly<Rational> jacobi_trudi(const LambdaVector& lambda) {
  const RationalField schur;
  const int l = lambda.length();
  std::function<TPoly<Rational>(int, std::vector<bool>&)> expand = [&](int row, std::vector<bool>& used) {
    if (row == l) return TPoly<Rational>::constant(Rational(1));
    TPoly<Rational> sum;
    int sign = 1;
    for (int col = 0; col < l; ++col) {
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = true;
      const auto entry = one_row(schur, lambda[row] - row + col);
      if (!entry.is_zero()) sum += entry * expand(row + 1, used) * Rational(sign);
      used[static_cast<std::size_t>(col)] = false;
      sign = -sign;
    }
    return sum;
  };
  std::vector<bool> used(static_cast<std::size_t>(l), false);
  return expand(0, used);
}

// Q_(r,s) = q_r q_s + sum_{i>=1} (rho^i - rho^{i-1}) q_{r+i} q_{s-i}.
template <CoeffField K>
TPoly<typename K::value_type> two_row(const K& field, int r, int s) {
  auto out = one_row(field, r) * one_row(field, s);
  for (int i = 1; i <= s; ++i) {
    const auto c = rho_pow(field, i) - rho_pow(field, i - 1);
    out += one_row(field, r + i) * one_row(field, s - i) * c;
  }
  return out;
}

std::vector<LambdaVector> integer_vectors(int max_length, int lo, int hi) {
  std::vector<LambdaVector> out{LambdaVector()};
  std::vector<LambdaVector> frontier{LambdaVector()};
  for (int l = 1; l <= max_length; ++l) {
    std::vector<LambdaVector> next;
    for (const auto& v : frontier) {
      for (int a = lo; a <= hi; ++a) next.push_back(v.concat(LambdaVector{a}));
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST(ApplyB, Examples) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  using G = TPoly<RatFunc>;
  const auto one = G::constant(RatFunc(1));
  const auto rho = RatFunc::rho();
  const RatFunc a = RatFunc(1) - rho;
  EXPECT_EQ(generic.apply_B(0, one), one);
  const auto t1 = G::term(Monomial::variable(1), RatFunc(1));
  EXPECT_EQ(generic.apply_B(1, one), t1 * a);
  const auto expected = G::term(Monomial::variable(1, 2), a * a - a * a * a * Rational(1, 2)) -
                        G::term(Monomial::variable(2), a * (RatFunc(1) - rho * rho));
  EXPECT_EQ(generic.apply_B(1, t1 * a), expected);
  EXPECT_TRUE(generic.apply_B(-1, one).is_zero());
  EXPECT_EQ(generic.apply_B(3, one), one_row(generic.field(), 3));
}

TEST(HlQ, Examples) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  const auto rho = RatFunc::rho();
  const auto q2 = TPoly<RatFunc>::term(Monomial::variable(2), RatFunc(1) - rho * rho) +
                  TPoly<RatFunc>::term(Monomial::variable(1, 2), (RatFunc(1) - rho) * (RatFunc(1) - rho) * Rational(1, 2));
  EXPECT_EQ(generic.hl_q({2}), q2);
  EXPECT_TRUE(generic.hl_q({2, -1}).is_zero());
  EXPECT_EQ(generic.hl_q({}), TPoly<RatFunc>::constant(RatFunc(1)));

  QEngine<RationalField> schur{RationalField(Rational(0))};
  EXPECT_EQ(schur.hl_q({1, 1}).to_string(), "1/2*t1^2 - 1*t2");

  QEngine<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_TRUE(xi2.hl_q({1, 1}).is_zero());
  EXPECT_EQ(xi2.hl_q({0, 2}).to_string(), "-2*t1^2");
  EXPECT_EQ(xi2.hl_q({2}).to_string(), "2*t1^2");
}

TEST(HlQ, MatchesJacobiTrudiAtRhoZero) {
  QEngine<RationalField> schur{RationalField(Rational(0))};
  for (const auto& lambda : integer_vectors(3, -2, 4)) {
    EXPECT_EQ(schur.hl_q(lambda), jacobi_trudi(lambda)) << lambda.to_string();
  }
}

TEST(HlQ, MatchesTwoRowFormula) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  QEngine<RationalField> minus_one{RationalField(Rational(-1))};
  QEngine<CyclotomicField> xi3{CyclotomicField(3)};
  for (int r = 0; r <= 5; ++r) {
    for (int s = 0; s <= r; ++s) {
      EXPECT_EQ(generic.hl_q({r, s}), two_row(generic.field(), r, s)) << r << "," << s;
      EXPECT_EQ(minus_one.hl_q({r, s}), two_row(minus_one.field(), r, s)) << r << "," << s;
      EXPECT_EQ(xi3.hl_q({r, s}), two_row(xi3.field(), r, s)) << r << "," << s;
    }
  }
}

TEST(HlQ, HomogeneousOfDegreeWeight) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  for (const auto& lambda : integer_vectors(3, -2, 3)) {
    const auto q = generic.hl_q(lambda);
    if (q.is_zero()) continue;
    EXPECT_TRUE(q.is_homogeneous());
    EXPECT_EQ(q.degree(), lambda.weight());
  }
}

TEST(HlQ, VanishesOnNegativeTailSum) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  for (const auto& lambda : integer_vectors(3, -3, 3)) {
    if (lambda.has_negative_tail_sum()) EXPECT_TRUE(generic.hl_q(lambda).is_zero()) << lambda.to_string();
  }
}

TEST(HlQ, RootOfUnityOmitsMultiplesOfN) {
  for (int n : {2, 3}) {
    QEngine<CyclotomicField> engine{CyclotomicField(n)};
    for (const auto& lambda : integer_vectors(3, -1, 4)) {
      const auto q = engine.hl_q(lambda);
      for (int v : q.variables()) EXPECT_NE(v % n, 0) << lambda.to_string();
    }
  }
}

TEST(HlQ, CachedEqualsFresh) {
  QEngine<CyclotomicField> cached{CyclotomicField(3), CacheOptions{true, 1000}};
  QEngine<CyclotomicField> tiny{CyclotomicField(3), CacheOptions{true, 3}};
  QEngine<CyclotomicField> fresh{CyclotomicField(3), CacheOptions{false, 0}};
  for (const auto& lambda : integer_vectors(3, -1, 3)) {
    const auto a = cached.hl_q(lambda);
    EXPECT_EQ(a, fresh.hl_q(lambda));
    EXPECT_EQ(a, tiny.hl_q(lambda));
    EXPECT_EQ(a, cached.hl_q(lambda));
  }
  EXPECT_EQ(fresh.cache_size(), 0u);
  EXPECT_LE(tiny.cache_size(), 3u);
}

TEST(HlQ, RationalMinusOneAgreesWithXi2) {
  QEngine<RationalField> rational{RationalField(Rational(-1))};
  QEngine<CyclotomicField> cyclo{CyclotomicField(2)};
  for (const auto& lambda : integer_vectors(3, -1, 4)) {
    const auto embedded = rational.hl_q(lambda).map_coefficients<Cyclotomic>(
        [&](const Rational& c) { return cyclo.field().from_rational(c); });
    EXPECT_EQ(embedded, cyclo.hl_q(lambda));
  }
}

TEST(Perp, TExamples) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  const auto t1 = TPoly<RatFunc>::term(Monomial::variable(1), RatFunc(1));
  EXPECT_EQ(generic.perp_t(1, t1), TPoly<RatFunc>::constant(RatFunc(1) / (RatFunc(1) - RatFunc::rho())));

  QEngine<CyclotomicField> xi3{CyclotomicField(3)};
  const auto& f3 = xi3.field();
  const auto t2sq = TPoly<Cyclotomic>::term(Monomial::variable(2, 2), f3.one());
  const auto expected = TPoly<Cyclotomic>::term(Monomial::variable(2), (f3.one() - f3.rho().pow(2)).inverse());
  EXPECT_EQ(xi3.perp_t(2, t2sq), expected);

  QEngine<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_THROW(xi2.perp_t(2, TPoly<Cyclotomic>::term(Monomial::variable(2), xi2.field().one())), AdjointUndefined);
}

TEST(Perp, PExamplesAndEvaluation) {
  QEngine<RationalFunctionField> generic{RationalFunctionField()};
  EXPECT_EQ(generic.perp_p(1, {1}).to_string(), "(1)*Q[0]");
  EXPECT_EQ(generic.perp_p(1, {2, 1}).to_string(), "(1)*Q[2,0] + (1)*Q[1,1]");
  EXPECT_TRUE(generic.evaluate(generic.perp_p(3, {1})).is_zero());
  // p_k^perp = k t_k^perp on Q_lambda.
  for (const auto& lambda : integer_vectors(3, -1, 3)) {
    for (int k = 1; k <= 3; ++k) {
      const auto lhs = generic.evaluate(generic.perp_p(k, lambda));
      const auto rhs = generic.perp_t(k, generic.hl_q(lambda)) * RatFunc(k);
      EXPECT_EQ(lhs, rhs) << lambda.to_string() << " k=" << k;
    }
  }
  QEngine<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_THROW(xi2.perp_p(2, {2}), AdjointUndefined);
}

TEST(RhoSpec, ParseAndDispatch) {
  EXPECT_EQ(RhoSpec::parse("generic"), RhoSpec::generic());
  EXPECT_EQ(RhoSpec::parse("xi:3").order(), 3);
  EXPECT_EQ(RhoSpec::parse("-1"), RhoSpec::rational(Rational(-1)));
  EXPECT_EQ(RhoSpec::parse("2/4").to_string(), "1/2");
  EXPECT_THROW(RhoSpec::parse("xi:1"), InvalidArgument);
  EXPECT_THROW(RhoSpec::parse("xi:65"), InvalidArgument);
  EXPECT_NO_THROW(RhoSpec::parse("xi:65", 100));
  EXPECT_THROW(RhoSpec::parse("xi:two"), InvalidArgument);
  EXPECT_THROW(RhoSpec::parse("rho"), InvalidArgument);
  const auto text = with_field(RhoSpec::parse("xi:2"), [](const auto& field) {
    QEngine engine{field};
    return engine.hl_q({2}).to_string();
  });
  EXPECT_EQ(text, "2*t1^2");
}
