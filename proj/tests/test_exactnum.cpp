#include <gtest/gtest.h>

#include <random>

#include "hlvir/cyclotomic.hpp"
#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"
#include "hlvir/ratfunc.hpp"
#include "hlvir/rational.hpp"
#include "hlvir/unipoly.hpp"

using namespace hlvir;

namespace {

RatFunc rf(std::initializer_list<Rational> num, std::initializer_list<Rational> den) {
  return RatFunc(UniPoly(num), UniPoly(den));
}

Rational random_rational(std::mt19937& gen) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(num(gen), den(gen));
}

UniPoly random_poly(std::mt19937& gen, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  const int d = deg(gen);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(gen));
  return UniPoly(c);
}

}  // namespace

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, -4).to_string(), "-1/2");
  EXPECT_EQ(Rational(6, 3).to_string(), "2");
  EXPECT_EQ(Rational(0, 5).to_string(), "0");
  EXPECT_EQ(Rational::parse("-7/14"), Rational(-1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), InvalidArgument);
  EXPECT_EQ(Rational(2).pow(-3), Rational(1, 8));
  EXPECT_EQ(binomial(6, 2), Rational(15));
  EXPECT_EQ(factorial(5), Rational(120));
}

TEST(UniPoly, DivisionAndGcd) {
  const UniPoly a{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
  const UniPoly b{Rational(1), Rational(1)};                // x + 1
  auto [q, r] = UniPoly::divmod(a, b);
  EXPECT_EQ(q, (UniPoly{Rational(-1), Rational(1)}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(UniPoly::gcd(a, UniPoly{Rational(2), Rational(2)}), b);
  EXPECT_THROW(UniPoly::exact_div(a, UniPoly{Rational(2), Rational(1)}), Error);
  EXPECT_EQ(a.to_string("x"), "x^2 - 1");
  EXPECT_EQ(UniPoly::parse("x^2 - 1", "x"), a);
  EXPECT_EQ(UniPoly::parse(a.to_string_ascending("z"), "z"), a);
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic_poly(1), (UniPoly{Rational(-1), Rational(1)}));
  EXPECT_EQ(cyclotomic_poly(2), (UniPoly{Rational(1), Rational(1)}));
  EXPECT_EQ(cyclotomic_poly(4), (UniPoly{Rational(1), Rational(0), Rational(1)}));
  EXPECT_EQ(cyclotomic_poly(6), (UniPoly{Rational(1), Rational(-1), Rational(1)}));
  // Phi_12 = x^4 - x^2 + 1
  EXPECT_EQ(cyclotomic_poly(12), (UniPoly{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)}));
  EXPECT_EQ(euler_phi(12), 4);
}

TEST(Cyclotomic, FieldOps) {
  const auto c2 = CyclotomicContext::make(2);
  const auto xi2 = Cyclotomic::generator(c2);
  EXPECT_EQ(xi2 * xi2, Cyclotomic(c2, Rational(1)));

  const auto c3 = CyclotomicContext::make(3);
  const auto xi3 = Cyclotomic::generator(c3);
  EXPECT_TRUE((Cyclotomic(c3, Rational(1)) + xi3 + xi3 * xi3).is_zero());
  EXPECT_THROW(xi2 + xi3, FieldMismatch);
  EXPECT_THROW(Cyclotomic(c3, Rational(0)).inverse(), DivisionByZero);

  const auto c5 = CyclotomicContext::make(5);
  const auto xi5 = Cyclotomic::generator(c5);
  const auto half = Cyclotomic(c5, Rational(1, 2));
  const auto x = half - xi5 * Rational(3) + xi5.pow(3);
  EXPECT_EQ(Cyclotomic::parse(x.to_string(), c5), x);
  EXPECT_EQ(x * x.inverse(), Cyclotomic(c5, Rational(1)));
  EXPECT_EQ((Cyclotomic(c3, Rational(-1, 2)) + xi3 * Rational(1, 2)).to_string(), "-1/2 + 1/2*z");
}

TEST(Cyclotomic, RootRelationsForAllSmallOrders) {
  for (int n = 1; n <= 30; ++n) {
    const auto ctx = CyclotomicContext::make(n);
    const auto xi = Cyclotomic::generator(ctx);
    EXPECT_TRUE(xi.pow(n).is_one()) << n;
    const auto phi = cyclotomic_poly(n).coefficients();
    Cyclotomic value(ctx, Rational(0));
    for (std::size_t i = 0; i < phi.size(); ++i) value += xi.pow(static_cast<long>(i)) * phi[i];
    EXPECT_TRUE(value.is_zero()) << n;
    for (int k = 1; k < n; ++k) EXPECT_FALSE(xi.pow(k).is_one()) << n << " " << k;
  }
}

TEST(Cyclotomic, FieldAxiomsOnRandomTriples) {
  std::mt19937 gen(7);
  for (int n : {3, 5, 8, 12}) {
    const auto ctx = CyclotomicContext::make(n);
    for (int trial = 0; trial < 40; ++trial) {
      const auto a = Cyclotomic::from_poly(ctx, random_poly(gen, 6));
      const auto b = Cyclotomic::from_poly(ctx, random_poly(gen, 6));
      const auto c = Cyclotomic::from_poly(ctx, random_poly(gen, 6));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(RatFunc, CanonicalForm) {
  const auto f = rf({Rational(1), Rational(0), Rational(-1)}, {Rational(1), Rational(-1)});  // (1-r^2)/(1-r)
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f, RatFunc(UniPoly{Rational(1), Rational(1)}));
  const auto g = RatFunc(1) / (RatFunc(1) - RatFunc::rho());
  EXPECT_EQ(g.to_string(), "(-1)/(ρ - 1)");
  EXPECT_EQ(RatFunc::parse(g.to_string()), g);
  EXPECT_EQ(RatFunc::rho().to_string(), "(ρ)");
  EXPECT_THROW(RatFunc(0).inverse(), DivisionByZero);
}

TEST(RatFunc, FieldAxiomsOnRandomTriples) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto pick = [&] {
      UniPoly den = random_poly(gen, 2);
      if (den.is_zero()) den = UniPoly::constant(Rational(1));
      return RatFunc(random_poly(gen, 3), den);
    };
    const auto a = pick();
    const auto b = pick();
    const auto c = pick();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    EXPECT_EQ(RatFunc::parse(a.to_string()), a);
  }
}

TEST(Specialize, AtRootsOfUnity) {
  EXPECT_EQ(specialize_at_root(rf({Rational(1)}, {Rational(1), Rational(-1)}), 2).to_string(), "1/2");
  EXPECT_TRUE(specialize_at_root(rf({Rational(1), 0, 0, Rational(-1)}, {Rational(1), Rational(-1)}), 3).is_zero());
  // (1 - r^2)/(1 - r^4) = 1/(1 + r^2) -> 1/2 at r = -1.
  EXPECT_EQ(specialize_at_root(rf({Rational(1), 0, Rational(-1)}, {Rational(1), 0, 0, 0, Rational(-1)}), 2).to_string(),
            "1/2");
  EXPECT_THROW(specialize_at_root(rf({Rational(1)}, {Rational(1), 0, Rational(-1)}), 2), PoleError);
}

TEST(Specialize, AtRationals) {
  EXPECT_TRUE(specialize_at_rational(rf({0, Rational(1)}, {Rational(1), Rational(-1)}), Rational(0)).is_zero());
  const auto f = rf({Rational(-1), Rational(1)}, {Rational(1), 0, Rational(-1)});  // (r-1)/(1-r^2)
  EXPECT_EQ(specialize_at_rational(f, Rational(0)), Rational(-1));
  EXPECT_THROW(specialize_at_rational(f, Rational(-1)), PoleError);
  EXPECT_EQ(specialize_at_rational(rf({Rational(1), 0, Rational(-1)}, {Rational(1), Rational(-1)}), Rational(1)),
            Rational(2));
}

TEST(Specialize, MultiplicativeWhereFinite) {
  std::mt19937 gen(3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    // Bias towards shared cyclotomic factors so that 0/0 cancellations occur.
    const UniPoly phi2 = cyclotomic_poly(2);
    const UniPoly phi4 = cyclotomic_poly(4);
    auto pick = [&] {
      UniPoly num = random_poly(gen, 2);
      UniPoly den = random_poly(gen, 2);
      if (den.is_zero()) den = UniPoly::constant(Rational(1));
      if (gen() % 2) num = num * phi2;
      if (gen() % 2) den = den * phi2;
      if (gen() % 3 == 0) num = num * phi4;
      return RatFunc(num, den);
    };
    const auto f = pick();
    const auto g = pick();
    for (int n : {2, 4}) {
      try {
        const auto sf = specialize_at_root(f, n);
        const auto sg = specialize_at_root(g, n);
        EXPECT_EQ(specialize_at_root(f * g, n), sf * sg);
        ++checked;
      } catch (const PoleError&) {
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Specialize, RationalRoundTrip) {
  for (const auto& q : {Rational(0), Rational(3, 7), Rational(-5)}) {
    EXPECT_EQ(specialize_at_rational(RatFunc(q), Rational(1, 2)), q);
    EXPECT_EQ(specialize_at_root(RatFunc(q), 3), Cyclotomic(CyclotomicContext::make(3), q));
  }
}

TEST(Field, Contexts) {
  const RationalField schur(Rational(0));
  EXPECT_TRUE(rho_pow(schur, 3).is_zero());
  const CyclotomicField xi2(2);
  EXPECT_EQ(xi2.rho().to_string(), "-1");
  EXPECT_TRUE(one_minus_rho_pow(xi2, 2).is_zero());
  const RationalFunctionField generic;
  EXPECT_EQ(one_minus_rho_pow(generic, 2).to_string(), "(-ρ^2 + 1)");
}
