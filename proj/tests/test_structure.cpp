#include <gtest/gtest.h>

#include "hlvir/structure.hpp"

using namespace hlvir;

namespace {

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

long measure(const LambdaVector& v) {
  long m = 0;
  for (int i = 0; i < v.length(); ++i) m += static_cast<long>(i + 1) * v[i];
  return m;
}

template <CoeffField K>
void expect_straightening_sound(const K& field, int max_length, int lo, int hi) {
  QEngine<K> engine{field};
  Structure<K> structure{field};
  for (const auto& lambda : integer_vectors(max_length, lo, hi)) {
    const auto normal = structure.straighten(lambda);
    EXPECT_TRUE(normal.supported_on_partitions()) << lambda.to_string();
    EXPECT_EQ(engine.evaluate(normal), engine.hl_q(lambda)) << lambda.to_string() << " -> " << normal.to_string();
  }
}

}  // namespace

TEST(Straighten, Examples) {
  Structure<RationalFunctionField> generic{RationalFunctionField()};
  EXPECT_EQ(generic.straighten(LambdaVector{1, 2}).to_string(), "(ρ)*Q[2,1]");
  EXPECT_EQ(generic.straighten(LambdaVector{1, 3}).to_string(), "(ρ)*Q[3,1] + (ρ - 1)*Q[2,2]");
  EXPECT_EQ(generic.straighten(LambdaVector{2, -1, 1}).to_string(), "(ρ - 1)*Q[2]");

  Structure<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_EQ(xi2.straighten(LambdaVector{0, 2}).to_string(), "-1*Q[2] - 2*Q[1,1]");

  Structure<RationalField> schur{RationalField(Rational(0))};
  EXPECT_EQ(schur.straighten(LambdaVector{1, 3}).to_string(), "-1*Q[2,2]");
}

TEST(Straighten, SoundOnSmallVectors) {
  expect_straightening_sound(RationalFunctionField(), 3, -2, 3);
  expect_straightening_sound(RationalField(Rational(0)), 3, -2, 3);
  expect_straightening_sound(CyclotomicField(2), 3, -2, 3);
  expect_straightening_sound(CyclotomicField(3), 3, -2, 3);
}

TEST(Straighten, EveryRuleDecreasesTheMeasure) {
  Structure<RationalFunctionField> generic{RationalFunctionField()};
  int rules = 0;
  generic.set_observer([&](const LambdaVector& from, const std::vector<LambdaVector>& to) {
    ++rules;
    const auto [lo, hi] = std::minmax_element(from.parts().begin(), from.parts().end());
    for (const auto& label : to) {
      if (label.length() < from.length()) continue;
      EXPECT_EQ(label.length(), from.length());
      EXPECT_LT(measure(label), measure(from)) << from.to_string() << " -> " << label.to_string();
      for (int p : label.parts()) {
        EXPECT_GE(p, *lo);
        EXPECT_LE(p, *hi);
      }
    }
  });
  for (const auto& lambda : integer_vectors(4, -3, 4)) (void)generic.straighten(lambda);
  EXPECT_GT(rules, 1000);
}

TEST(Straighten, SchurQSwapRuleAtXi2) {
  QEngine<CyclotomicField> engine{CyclotomicField(2)};
  const auto& field = engine.field();
  for (const auto& lambda : integer_vectors(3, -3, 3)) {
    for (int i = 0; i + 1 < lambda.length(); ++i) {
      const int a = lambda[i];
      const int b = lambda[i + 1];
      std::vector<int> swapped = lambda.parts();
      std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
      auto rhs = -engine.hl_q(LambdaVector(swapped));
      if (a == -b) {
        std::vector<int> removed = lambda.parts();
        removed.erase(removed.begin() + i, removed.begin() + i + 2);
        rhs += engine.hl_q(LambdaVector(removed)) * field.from_rational(Rational(a % 2 == 0 ? 2 : -2));
      }
      EXPECT_EQ(engine.hl_q(lambda), rhs) << lambda.to_string() << " at " << i;
    }
  }
}

TEST(CCoeff, Examples) {
  Structure<RationalFunctionField> generic{RationalFunctionField()};
  const auto rho = RatFunc::rho();
  for (int r = 1; r <= 3; ++r) EXPECT_EQ(generic.c_coeff(Partition({r})), (RatFunc(1) - rho).inverse());
  EXPECT_EQ(generic.c_coeff(Partition({1, 1})), -(RatFunc(1) - rho * rho).inverse());

  Structure<RationalField> schur{RationalField(Rational(0))};
  for (int k = 1; k <= 5; ++k) {
    for (int j = 0; j <= 4; ++j) {
      std::vector<int> hook{k};
      hook.insert(hook.end(), static_cast<std::size_t>(j), 1);
      EXPECT_EQ(schur.c_coeff(Partition(hook)), Rational(j % 2 == 0 ? 1 : -1));
    }
  }
  EXPECT_TRUE(schur.c_coeff(Partition({2, 2})).is_zero());

  Structure<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_EQ(xi2.c_coeff(Partition({2, 1})).to_string(), "-1/2");
  EXPECT_THROW(xi2.c_coeff(Partition({1, 1})), SingularCoefficient);
}

// Each factor 1 - rho^k with n | k carries exactly one factor Phi_n, so the order of
// c_mu at xi_n is floor((l-1)/n) - sum_i floor(m_i/n).
TEST(CCoeff, VanishingAndPolesAtRootsOfUnity) {
  for (int n : {2, 3, 4}) {
    Structure<CyclotomicField> s{CyclotomicField(n)};
    for (int size = 1; size <= 8; ++size) {
      for (const auto& mu : partitions_of(size)) {
        int order = (mu.length() - 1) / n;
        bool small_multiplicities = true;
        for (int k = 1; k <= size; ++k) {
          order -= mu.multiplicity(k) / n;
          if (mu.multiplicity(k) >= n) small_multiplicities = false;
        }
        if (mu.length() >= n + 1 && small_multiplicities) EXPECT_EQ(order > 0, true) << mu.to_string();
        if (order < 0) {
          EXPECT_THROW(s.c_coeff(mu), SingularCoefficient) << mu.to_string();
        } else {
          EXPECT_EQ(s.c_coeff(mu).is_zero(), order > 0) << mu.to_string() << " n=" << n;
        }
      }
    }
  }
  // l(mu) >= n + 1 alone does not force vanishing once b_mu(xi_n) = 0 as well.
  Structure<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_EQ(xi2.c_coeff(Partition({1, 1, 1})).to_string(), "1/2");
  EXPECT_THROW(xi2.c_coeff(Partition({1, 1, 1, 1})), SingularCoefficient);
}

TEST(PExpand, Examples) {
  Structure<RationalFunctionField> generic{RationalFunctionField()};
  QEngine<RationalFunctionField> engine{RationalFunctionField()};
  EXPECT_EQ(generic.p_expand(1).to_string(), "(-1)/(ρ - 1)*Q[1]");
  EXPECT_EQ(generic.p_expand(2).to_string(), "(-1)/(ρ - 1)*Q[2] + (1)/(ρ^2 - 1)*Q[1,1]");
  for (int r = 1; r <= 6; ++r) {
    EXPECT_EQ(engine.evaluate(generic.p_expand(r)), TPoly<RatFunc>::term(Monomial::variable(r), RatFunc(r)));
  }
  Structure<RationalField> schur{RationalField(Rational(0))};
  EXPECT_EQ(schur.p_expand(2).to_string(), "1*Q[2] - 1*Q[1,1]");
  Structure<CyclotomicField> xi2{CyclotomicField(2)};
  EXPECT_THROW(xi2.p_expand(2), SingularCoefficient);
}

TEST(MultiplyP, Examples) {
  Structure<RationalFunctionField> generic{RationalFunctionField()};
  EXPECT_EQ(generic.multiply_p(1, {1}).to_string(), "(1)*Q[2] + (-1)/(ρ - 1)*Q[1,1]");
  EXPECT_EQ(generic.multiply_p(2, {}), generic.p_expand(2));
  QEngine<RationalFunctionField> engine{RationalFunctionField()};
  const auto combination = generic.multiply_p(1, {2, -1});
  EXPECT_EQ(combination.size(), 3u);
  EXPECT_NE(combination.find(LambdaVector{3, -1}), nullptr);
  EXPECT_NE(combination.find(LambdaVector{2, 0}), nullptr);
  EXPECT_NE(combination.find(LambdaVector{2, -1, 1}), nullptr);
  EXPECT_TRUE(engine.evaluate(combination).is_zero());
}

TEST(MultiplyP, SoundAgainstDirectProduct) {
  auto check = [](const auto& field, int n) {
    using K = std::decay_t<decltype(field)>;
    QEngine<K> engine{field};
    Structure<K> structure{field};
    for (const auto& lambda : integer_vectors(2, -1, 3)) {
      for (int r = 1; r <= 4; ++r) {
        if (n != 0 && r % n == 0) continue;
        const auto pr = TPoly<typename K::value_type>::term(Monomial::variable(r), field.from_rational(Rational(r)));
        EXPECT_EQ(engine.evaluate(structure.multiply_p(r, lambda)), pr * engine.hl_q(lambda))
            << lambda.to_string() << " r=" << r;
      }
    }
  };
  check(RationalFunctionField(), 0);
  check(RationalField(Rational(0)), 0);
  check(CyclotomicField(2), 2);
  check(CyclotomicField(3), 3);
}

TEST(MnExpand, Examples) {
  EXPECT_EQ(mn_expand(1, Partition({1})).to_string(), "1*Q[2] + 1*Q[1,1]");
  EXPECT_EQ(mn_expand(2, Partition({1})).to_string(), "1*Q[3] - 1*Q[1,1,1]");
  EXPECT_EQ(mn_expand(2, Partition()).to_string(), "1*Q[2] - 1*Q[1,1]");
}

TEST(MnExpand, AgreesWithMultiplicationAndStraightening) {
  Structure<RationalField> schur{RationalField(Rational(0))};
  for (int size = 0; size <= 4; ++size) {
    for (const auto& lambda : partitions_of(size)) {
      for (int r = 1; r <= 3; ++r) {
        EXPECT_EQ(schur.straighten(schur.multiply_p(r, LambdaVector(lambda))), mn_expand(r, lambda))
            << lambda.to_string() << " r=" << r;
      }
    }
  }
}

TEST(DerivativeFormula, HoldsForSmallVectors) {
  auto check = [](const auto& field) {
    using K = std::decay_t<decltype(field)>;
    QEngine<K> engine{field};
    for (const auto& lambda : integer_vectors(2, -1, 4)) {
      for (int r = 1; r <= 4; ++r) {
        QCombination<typename K::value_type> shifted;
        for (int i = 1; i <= lambda.length(); ++i) shifted.add(lambda.plus_at(i, -r), field.one());
        EXPECT_EQ(engine.hl_q(lambda).derivative(r), engine.evaluate(shifted) * one_minus_rho_pow(field, r))
            << lambda.to_string() << " r=" << r;
      }
    }
  };
  check(RationalFunctionField());
  check(CyclotomicField(2));
  check(CyclotomicField(3));
}

TEST(ExpandInQBasis, InvertsEvaluation) {
  QEngine<RationalFunctionField> engine{RationalFunctionField()};
  Structure<RationalFunctionField> generic{RationalFunctionField()};
  for (int r = 1; r <= 4; ++r) {
    const auto pr = TPoly<RatFunc>::term(Monomial::variable(r), RatFunc(r));
    EXPECT_EQ(expand_in_q_basis(pr, engine), generic.p_expand(r));
  }
  const auto combination = generic.straighten(LambdaVector{1, 0, 3});
  EXPECT_EQ(expand_in_q_basis(engine.evaluate(combination), engine), combination);
}
