#include <gtest/gtest.h>

#include <random>

#include "hlvir/verify.hpp"
#include "hlvir/virasoro.hpp"

using namespace hlvir;

namespace {

const RationalField kQ{Rational(0)};

TPoly<Rational> poly(const std::string& text) { return poly_from_text(text, kQ); }

LinOperator<Rational> op(const std::string& text) { return build_operator(VirasoroSpec::parse(text), kQ); }

// Two operators agree on every monomial of degree <= d.
template <class F>
bool agree(const LinOperator<F>& a, const LinOperator<F>& b, int d) {
  for (const auto& m : monomials_up_to_degree(d)) {
    const auto f = TPoly<F>::term(m, F(1));
    if (apply(a, f) != apply(b, f)) return false;
  }
  return true;
}

Verdict run(IdentityCase c) {
  Workspace w{CacheOptions{true, 10000}};
  return verify_case(c, w);
}

}  // namespace

TEST(Operators, Examples) {
  EXPECT_EQ(apply(op("L:n=2,m=0"), poly("2*t1")).to_string(), "9/4*t1");
  EXPECT_EQ(apply(op("L:n=2,m=-1"), poly("1")).to_string(), "1/2*t1^2");
  EXPECT_EQ(apply(op("LS:m=-2"), poly("1")).to_string(), "1/2*t1^2");
  EXPECT_EQ(apply(op("LS:m=-1"), poly("1*t1")).to_string(), "2*t2");
  EXPECT_EQ(apply(op("LS:m=1"), poly("1*t2 + 1/2*t1^2")).to_string(), "1*t1");
  EXPECT_EQ(commutator_apply(op("L:n=2,m=1"), op("L:n=2,m=-1"), poly("1*t1")).to_string(), "9/2*t1");
  EXPECT_EQ(commutator_apply(op("L:n=2,m=2"), op("L:n=2,m=-2"), poly("1")).to_string(), "3");
}

TEST(Operators, FirstPositiveModeTerms) {
  std::string text;
  for (const auto& term : op("L:n=2,m=1").instantiate(7)) text += term.to_string() + " ";
  for (const char* piece : {"1*t1*d3", "3*t3*d5", "5*t5*d7", "1/2*d1*d1"}) {
    EXPECT_NE(text.find(piece), std::string::npos) << text;
  }
  EXPECT_EQ(text.find("t2*d4"), std::string::npos) << text;
}

TEST(Operators, SpecParsing) {
  EXPECT_EQ(VirasoroSpec::parse("L:n=2,m=-1").to_string(), "L:n=2,m=-1");
  EXPECT_EQ(VirasoroSpec::parse(" LS : m=3 ").to_string(), "LS:m=3");
  EXPECT_THROW(VirasoroSpec::parse("L:m=1"), InvalidArgument);
  EXPECT_THROW(VirasoroSpec::parse("L:n=1,m=1"), InvalidArgument);
  EXPECT_THROW(VirasoroSpec::parse("LS:n=2,m=1"), InvalidArgument);
  EXPECT_THROW(VirasoroSpec::parse("V:n=2,m=0"), InvalidArgument);
  EXPECT_THROW(VirasoroSpec::parse("W:n=2,m=-1"), InvalidArgument);
  EXPECT_THROW(VirasoroSpec::parse("Q:n=2,m=1"), InvalidArgument);
  EXPECT_THROW(VirasoroSpec::parse("L:n=2,m=x"), InvalidArgument);
}

TEST(Operators, DecompositionsAgreeExtensionally) {
  for (int n : {2, 3}) {
    for (int m = 0; m <= 2; ++m) {
      auto sum = op("Lhat:n=" + std::to_string(n) + ",m=" + std::to_string(m));
      sum += Rational(1, 2) * op("W:n=" + std::to_string(n) + ",m=" + std::to_string(m));
      EXPECT_TRUE(agree(sum, op("Ltilde:n=" + std::to_string(n) + ",m=" + std::to_string(m)), 7));
    }
  }
  for (int m = -3; m <= 3; ++m) {
    auto sum = op("LShat:m=" + std::to_string(m));
    sum += Rational(1, 2) * op("WS:m=" + std::to_string(m));
    EXPECT_TRUE(agree(sum, op("LS:m=" + std::to_string(m)), 7)) << m;
  }
  // For m >= 1 the Schur operator without a quadratic multiplication tail is the same map.
  for (int m = 1; m <= 4; ++m) {
    LinOperator<Rational> plain;
    plain.add_family({Rational(1), true, {{PrimitiveKind::Mul, 0}, {PrimitiveKind::Der, m}}});
    for (int k = 1; k <= m - 1; ++k) plain.add_term(Rational(1, 2), {Primitive::der(k), Primitive::der(m - k)});
    EXPECT_TRUE(agree(plain, op("LS:m=" + std::to_string(m)), 7)) << m;
  }
}

TEST(Operators, BracketOnRandomPolynomials) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto monomials = monomials_up_to_degree(5);
  std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    TPoly<Rational> f;
    for (int k = 0; k < 4; ++k) f.add_term(monomials[pick(gen)], Rational(coeff(gen)));
    for (int n : {2, 3}) {
      for (int i = -2; i <= 2; ++i) {
        for (int j = -2; j <= 2; ++j) {
          const auto lhs = commutator_apply(op("L:n=" + std::to_string(n) + ",m=" + std::to_string(i)),
                                            op("L:n=" + std::to_string(n) + ",m=" + std::to_string(j)), f);
          const auto rhs = apply(op("L:n=" + std::to_string(n) + ",m=" + std::to_string(i + j)), f) *
                               Rational(n * (i - j)) +
                           f * central_term(n, i, j);
          EXPECT_EQ(lhs, rhs) << "n=" << n << " i=" << i << " j=" << j << " f=" << f.to_string();
        }
      }
    }
  }
}

TEST(Verify, DocumentedCases) {
  IdentityCase bracket{CaseKind::Bracket};
  bracket.n = 2;
  bracket.i = 2;
  bracket.j = -2;
  bracket.degree = 4;
  const auto v = run(bracket);
  EXPECT_TRUE(v.equal);
  EXPECT_NE(v.note.find("central term 2 (expected 2)"), std::string::npos) << v.note;

  IdentityCase t11{CaseKind::Positive};
  t11.n = 2;
  t11.m = 1;
  t11.lambda = {3, 1};
  EXPECT_TRUE(run(t11).equal);

  IdentityCase anchor{CaseKind::Negative};
  anchor.n = 2;
  anchor.m = 1;
  anchor.lambda = {0};
  const auto a = run(anchor);
  EXPECT_TRUE(a.equal);
  EXPECT_EQ(a.lhs, "1/2*t1^2");
  EXPECT_EQ(a.rhs, "1/2*t1^2");
  anchor.lambda = {};
  EXPECT_EQ(run(anchor).lhs, "1/2*t1^2");
  anchor.n = 3;
  anchor.lambda = {1};
  EXPECT_TRUE(run(anchor).equal);

  IdentityCase first{CaseKind::NegativeFirstOrder};
  first.n = 2;
  first.m = 1;
  first.lambda = {};
  const auto empty = run(first);
  EXPECT_TRUE(empty.equal);
  EXPECT_EQ(empty.lhs, "0");
  first.lambda = {1};
  EXPECT_TRUE(run(first).equal);
  first.n = 3;
  first.lambda = {2};
  EXPECT_TRUE(run(first).equal);

  IdentityCase ta3{CaseKind::SchurPositive};
  ta3.m = 1;
  ta3.lambda = {2};
  const auto s = run(ta3);
  EXPECT_EQ(s.expansion, "1*Q[1]");
  EXPECT_EQ(s.lhs, "1*t1");
  ta3.lambda = {1};
  EXPECT_EQ(run(ta3).expansion, "0");
  ta3.m = 2;
  ta3.lambda = {3, 1};
  EXPECT_TRUE(run(ta3).equal);

  IdentityCase ta4{CaseKind::SchurNegative};
  ta4.m = 1;
  ta4.lambda = {1};
  const auto t = run(ta4);
  EXPECT_EQ(t.lhs, "2*t2");
  EXPECT_TRUE(t.equal);
  ta4.m = 2;
  ta4.lambda = {};
  EXPECT_EQ(run(ta4).lhs, "1/2*t1^2");
  ta4.m = 3;
  ta4.lambda = {2, 1};
  EXPECT_TRUE(run(ta4).equal);

  IdentityCase remark{CaseKind::HookProducts};
  remark.m = 3;
  const auto r = run(remark);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.expansion, "2*Q[3] - 2*Q[1,1,1]");
}

TEST(Verify, OperatorIdentitiesSmallSweep) {
  Workspace w{CacheOptions{true, 10000}};
  for (auto kind : {CaseKind::LhatCommutator, CaseKind::SchurHatCommutator, CaseKind::SchurCommutator}) {
    for (int m = -2; m <= 2; ++m) {
      if (m == 0 && kind == CaseKind::SchurCommutator) continue;
      for (int r = -2; r <= 3; ++r) {
        IdentityCase c{kind};
        c.n = 2;
        c.m = m;
        c.r = r;
        c.degree = 4;
        EXPECT_TRUE(verify_case(c, w).equal) << c.to_string();
      }
    }
  }
  for (int m = 0; m <= 2; ++m) {
    IdentityCase c{CaseKind::LtildeCommutator};
    c.n = 3;
    c.m = m;
    c.r = 1;
    c.degree = 4;
    EXPECT_TRUE(verify_case(c, w).equal) << c.to_string();
  }
  for (auto kind : {CaseKind::Exchange, CaseKind::PowerTimesB, CaseKind::AdjointTimesB, CaseKind::ShiftedSum}) {
    IdentityCase c{kind};
    c.i = 1;
    c.j = 2;
    c.m = -1;
    c.r = 2;
    c.degree = 4;
    c.rho = RhoSpec::generic();
    EXPECT_TRUE(verify_case(c, w).equal) << c.to_string();
    c.rho = RhoSpec::root_of_unity(3);
    EXPECT_TRUE(verify_case(c, w).equal) << c.to_string();
  }
}

TEST(Verify, HypothesesAndSingularities) {
  Workspace w;
  IdentityCase c{CaseKind::Negative};
  c.m = 0;
  EXPECT_THROW(verify_case(c, w), InvalidArgument);
  IdentityCase lsb{CaseKind::SchurCommutator};
  lsb.m = 0;
  EXPECT_THROW(verify_case(lsb, w), InvalidArgument);
  IdentityCase perp{CaseKind::AdjointTimesB};
  perp.r = 2;
  perp.rho = RhoSpec::root_of_unity(2);
  EXPECT_THROW(verify_case(perp, w), AdjointUndefined);
  IdentityCase mult{CaseKind::Multiplication};
  mult.r = 3;
  mult.rho = RhoSpec::root_of_unity(3);
  EXPECT_THROW(verify_case(mult, w), SingularCoefficient);
}

TEST(Verify, InequalityIsReported) {
  // A deliberately wrong right-hand side must be caught.
  const CyclotomicField field(2);
  QEngine<CyclotomicField> engine{field};
  auto expansion = rhs_positive(field, 2, 1, LambdaVector{3, 1});
  expansion.add(LambdaVector{2}, field.one());
  const auto lhs = apply(build_operator(VirasoroSpec{OperatorFamily::L, 2, 1}, field), engine.hl_q({3, 1}));
  EXPECT_NE(lhs, engine.evaluate(expansion));
}

TEST(Serialize, RoundTrips) {
  Workspace w;
  auto check = [&](const auto& field) {
    auto& engine = w.engine(field);
    for (const LambdaVector& lambda : {LambdaVector{3, 1}, LambdaVector{2, 2, 1}, LambdaVector{}, LambdaVector{4}}) {
      const auto q = engine.hl_q(lambda);
      EXPECT_EQ(poly_from_json(Json::parse(poly_to_json(q).dump()), field), q);
      EXPECT_EQ(poly_from_text(q.to_string(), field), q) << q.to_string();
    }
  };
  check(RationalField(Rational(0)));
  check(RationalField(Rational(-1)));
  check(RationalField(Rational(1, 2)));
  check(CyclotomicField(3));
  check(CyclotomicField(5));
  check(RationalFunctionField());

  Structure<RationalFunctionField> generic{RationalFunctionField()};
  const auto combination = generic.straighten(LambdaVector{1, 0, 3});
  EXPECT_EQ(combination_from_json(combination_to_json(combination), RationalFunctionField()), combination);
  EXPECT_EQ(poly_to_json(poly("1/2*t1^2 - 1*t2")).dump(),
            R"([{"coeff":"1/2","monomial":{"1":2}},{"coeff":"-1","monomial":{"2":1}}])");
  EXPECT_THROW(poly_from_json(Json::parse(R"([{"monomial":{"0":1},"coeff":"1"}])"), kQ), InvalidArgument);
  EXPECT_THROW(poly_from_text("1*t", kQ), InvalidArgument);
}
