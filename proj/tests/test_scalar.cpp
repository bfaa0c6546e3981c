#include <gtest/gtest.h>

#include <random>

#include "lck/matrix.hpp"
#include "lck/scalar.hpp"

using namespace lck;

namespace {

struct Env {
  ParamSpacePtr space = make_params({"a", "b", "c"});
  Scalar a = Scalar::param(space, "a");
  Scalar b = Scalar::param(space, "b");
  Scalar c = Scalar::param(space, "c");
};

Scalar random_poly(std::mt19937& rng, const Env& env) {
  std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), nterms(1, 3);
  Scalar s;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Scalar m(coef(rng));
    for (int k = deg(rng); k > 0; --k) m *= env.a;
    for (int k = deg(rng); k > 0; --k) m *= env.b;
    if (deg(rng) == 2) m *= env.c;
    s += m;
  }
  return s;
}

Scalar random_scalar(std::mt19937& rng, const Env& env) {
  Scalar d = random_poly(rng, env);
  while (d.is_zero()) d = random_poly(rng, env);
  return random_poly(rng, env) / d;
}

}  // namespace

TEST(Poly, PrintsInGradedLexOrder) {
  auto sp = make_params({"a", "b"});
  Poly a = Poly::variable(sp, "a"), b = Poly::variable(sp, "b");
  Poly p = a * a * b.scaled(3) - b.scaled(Rational(1, 2)) + Poly(1);
  EXPECT_EQ(p.str(), "3*a^2*b - 1/2*b + 1");
  EXPECT_EQ(p.total_degree(), 3u);
}

TEST(Poly, GcdOfProducts) {
  auto sp = make_params({"x", "y"});
  Poly x = Poly::variable(sp, "x"), y = Poly::variable(sp, "y");
  Poly f = x + y, g = x - y.scaled(2), h = x * y + Poly(1);
  Poly d = gcd(f * g * h, f * h * h);
  EXPECT_EQ(d, (f * h).monic());
  EXPECT_EQ(gcd(x * x - y * y, x + y), (x + y).monic());
  EXPECT_TRUE(gcd(x, y).is_constant());
}

TEST(Poly, DifferentSpacesUnify) {
  auto s1 = make_params({"a"});
  auto s2 = make_params({"b"});
  Poly a = Poly::variable(s1, "a"), b = Poly::variable(s2, "b");
  Poly p = a + b;
  EXPECT_EQ(p.nvars(), 2u);
  EXPECT_EQ(p.eval({{"a", 2}, {"b", 3}}), 5);
  EXPECT_EQ(p - b, a);
}

TEST(Scalar, EvalOfFraction) {
  Env e;
  Scalar s = -(Scalar(1) + e.a * e.a) / e.b;
  EXPECT_EQ(s.eval({{"a", 0}, {"b", 1}}), -1);
  EXPECT_EQ(s.eval({{"a", 1}, {"b", -1}}), 2);
  try {
    s.eval({{"a", 0}, {"b", 0}});
    FAIL() << "expected DenominatorVanishes";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DenominatorVanishes);
    EXPECT_NE(err.witness().find("b=0"), std::string::npos);
  }
  EXPECT_EQ(s.str(), "(-a^2 - 1)/b");
}

TEST(Scalar, ReducesCommonFactors) {
  Env e;
  Scalar s = (e.a * e.a - e.b * e.b) / (e.a + e.b);
  EXPECT_TRUE(s.den().is_constant());
  EXPECT_EQ(s.num(), (e.a - e.b).num());
  Scalar t = (e.a * e.b + e.b) / (e.b * e.b);
  EXPECT_EQ(t.str(), "(a + 1)/b");
}

TEST(Scalar, MissingParameterIsInvalid) {
  Env e;
  EXPECT_THROW((e.a + e.b).eval({{"a", 1}}), Error);
}

TEST(Scalar, DivisionByZeroThrows) {
  Env e;
  EXPECT_THROW(e.a / Scalar(0), Error);
  EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Scalar, FieldAxiomsOnRandomSamples) {
  Env e;
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> pt(-7, 7);
  for (int iter = 0; iter < 60; ++iter) {
    Scalar x = random_scalar(rng, e), y = random_scalar(rng, e), z = random_scalar(rng, e);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + y, y + x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), Scalar(1));
    }
    // equality must agree with pointwise evaluation
    Scalar l = x * (y - z), r = x * y - x * z;
    int checked = 0;
    for (int tries = 0; checked < 5 && tries < 100; ++tries) {
      Assignment at{{"a", Rational(pt(rng), 2)}, {"b", Rational(pt(rng), 3)}, {"c", pt(rng)}};
      try {
        EXPECT_EQ(l.eval(at), r.eval(at));
        ++checked;
      } catch (const Error&) {
      }
    }
  }
}

TEST(Scalar, NormalizedDenominatorIsMonic) {
  Env e;
  Scalar s = Scalar(2) / (Scalar(-4) * e.b);
  EXPECT_EQ(s.den().leading_coefficient(), 1);
  EXPECT_EQ(s, Scalar(Rational(-1, 2)) / e.b);
}

TEST(CScalar, NormTimesConjugateIsReal) {
  Env e;
  CScalar z(e.a, e.b / e.c);
  CScalar w = z * z.conj();
  EXPECT_TRUE(w.im().is_zero());
  EXPECT_EQ(w.re(), z.norm2());
  EXPECT_EQ(CScalar::i() * CScalar::i(), CScalar(-1));
  EXPECT_EQ(z * z.inverse(), CScalar(1));
}

TEST(Matrix, RankCarriesPivotLocus) {
  Env e;
  Mat m = Mat::from_rows({{e.a, Scalar(1)}, {Scalar(0), e.b}});
  auto ech = echelon(m);
  EXPECT_EQ(ech.rank(), 2u);
  EXPECT_FALSE(ech.locus.empty());
  Mat n = Mat::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
  EXPECT_EQ(rank(n), 1u);
  auto ker = nullspace(n);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero_vector(n * ker[0]));
}

TEST(Matrix, InverseAndDeterminant) {
  Env e;
  Mat m = Mat::from_rows({{e.a, Scalar(1)}, {Scalar(-1), e.b}});
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Mat::identity(2));
  EXPECT_EQ(determinant(m), e.a * e.b + Scalar(1));
}

TEST(Matrix, SolveReportsInconsistency) {
  Mat m = Mat::from_rows({{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}});
  EXPECT_FALSE(solve(m, Vec{Scalar(1), Scalar(3)}));
  auto s = solve(m, Vec{Scalar(1), Scalar(2)});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->kernel.size(), 1u);
  EXPECT_EQ(m * s->particular, (Vec{Scalar(1), Scalar(2)}));
}

TEST(Poly, GcdRecoversPlantedFactor) {
  Env e;
  std::mt19937 rng(7);
  for (int iter = 0; iter < 80; ++iter) {
    Poly f = random_poly(rng, e).num(), g = random_poly(rng, e).num(), h = random_poly(rng, e).num();
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    Poly d = gcd(f * h, g * h);
    EXPECT_TRUE(try_divide(f * h, d).has_value());
    EXPECT_TRUE(try_divide(g * h, d).has_value());
    EXPECT_TRUE(try_divide(d, h.monic()).has_value()) << d.str() << " vs " << h.str();
    // cofactors must be coprime
    EXPECT_TRUE(gcd(divide_exact(f * h, d), divide_exact(g * h, d)).is_constant());
  }
}
