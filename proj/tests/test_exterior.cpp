#include <gtest/gtest.h>

#include <random>

#include "lck/catalog.hpp"

using namespace lck;

namespace {

KForm d(std::size_t n, std::initializer_list<std::size_t> idx) {
  KForm f(n, idx.size());
  f.set(Index(idx), Scalar(1));
  return f;
}

Vec e(std::size_t n, std::size_t i) { return unit_vector<Scalar>(n, i); }

KForm random_form(std::mt19937& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<int> coef(-4, 4), keep(0, 2);
  KForm f(n, k);
  for (const auto& I : combinations(n, k))
    if (keep(rng) == 0) f.set(I, Scalar(coef(rng)));
  return f;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  Vec v(n);
  for (auto& x : v) x = Scalar(coef(rng));
  return v;
}

}  // namespace

TEST(Wedge, ShuffleConvention) {
  const std::size_t n = 4;
  EXPECT_EQ(d(n, {2, 3}).evaluate({e(n, 2), e(n, 3)}), Scalar(1));
  EXPECT_TRUE(wedge(d(n, {0}), d(n, {0})).is_zero());
  const KForm top = wedge(d(n, {0, 1}), d(n, {2, 3}));
  EXPECT_EQ(top.evaluate({e(n, 0), e(n, 1), e(n, 2), e(n, 3)}), Scalar(1));
  EXPECT_EQ(wedge(d(n, {1}), d(n, {0})), -d(n, {0, 1}));
}

TEST(Wedge, GradedCommutative) {
  std::mt19937 rng(11);
  for (int it = 0; it < 30; ++it) {
    const std::size_t p = 1 + it % 2, q = 1 + (it / 2) % 3;
    const KForm a = random_form(rng, 5, p), b = random_form(rng, 5, q);
    const Scalar sign((p * q) % 2 ? -1 : 1);
    EXPECT_EQ(wedge(a, b), sign * wedge(b, a));
  }
  EXPECT_THROW(wedge(KForm(3, 1), KForm(4, 1)), Error);
}

TEST(Differential, U2DualBasis) {
  const LieAlgebra u = catalog::u2();
  EXPECT_EQ(ce_d(u, d(4, {1})), d(4, {2, 3}));
  EXPECT_EQ(ce_d(u, d(4, {2})), -d(4, {1, 3}));  // e^3 ^ e^1
  EXPECT_EQ(ce_d(u, d(4, {3})), d(4, {1, 2}));
  EXPECT_TRUE(ce_d(u, d(4, {0})).is_zero());
}

TEST(Differential, Gl2DualBasis) {
  const LieAlgebra g = catalog::gl2r();
  EXPECT_EQ(ce_d(g, d(4, {1})), -d(4, {2, 3}));
  EXPECT_EQ(ce_d(g, d(4, {2})), Scalar(-2) * d(4, {1, 2}));
  EXPECT_EQ(ce_d(g, d(4, {3})), Scalar(2) * d(4, {1, 3}));
}

TEST(Differential, OneFormsMatchMinusBracket) {
  std::mt19937 rng(3);
  for (const char* id : {"u2", "gl2r"}) {
    const LieAlgebra g = get(id).algebra;
    for (int it = 0; it < 20; ++it) {
      const KForm a = random_form(rng, 4, 1);
      const Vec x = random_vec(rng, 4), y = random_vec(rng, 4);
      EXPECT_EQ(ce_d(g, a).evaluate({x, y}), -a.evaluate({g.bracket(x, y)}));
    }
  }
}

TEST(Differential, SquareIsZeroOnRandomForms) {
  std::mt19937 rng(20240611);
  for (const char* id : {"u2", "gl2r", "su2", "sl2r"}) {
    const auto entry = get(id);
    const LieAlgebra& g = entry.algebra;
    const std::size_t n = g.dim();
    const KForm lambda = n == 4 ? -KForm::dual(4, 0) : KForm(n, 1);
    ASSERT_TRUE(ce_d(g, lambda).is_zero());
    for (int it = 0; it < 200; ++it) {
      const KForm a = random_form(rng, n, static_cast<std::size_t>(it) % n);
      EXPECT_TRUE(ce_d(g, ce_d(g, a)).is_zero()) << id;
      EXPECT_TRUE(twisted_d(g, twisted_d(g, a, lambda), lambda).is_zero()) << id;
    }
  }
}

TEST(TwistedDifferential, Examples) {
  const LieAlgebra u = catalog::u2();
  const KForm lambda = -d(4, {0});
  EXPECT_EQ(twisted_d(u, d(4, {1}), KForm(4, 1)), ce_d(u, d(4, {1})));
  EXPECT_EQ(twisted_d(u, d(4, {1}), lambda), d(4, {2, 3}) + d(4, {0, 1}));
  EXPECT_EQ(twisted_d(u, KForm::constant(4, 1), lambda), -lambda);
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior(e(4, 0), d(4, {0, 1})), d(4, {1}));
  EXPECT_TRUE(interior(e(4, 2), d(4, {0, 1})).is_zero());
  EXPECT_EQ(interior(e(4, 2), d(4, {2, 3})), d(4, {3}));
  try {
    interior(e(4, 0), KForm::constant(4, 1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DegreeZero);
  }
}

TEST(Interior, SquareIsZeroAndMatchesEvaluation) {
  std::mt19937 rng(5);
  for (int it = 0; it < 40; ++it) {
    const KForm a = random_form(rng, 5, 3);
    const Vec v = random_vec(rng, 5), x = random_vec(rng, 5), y = random_vec(rng, 5);
    EXPECT_TRUE(interior(v, interior(v, a)).is_zero());
    EXPECT_EQ(interior(v, a).evaluate({x, y}), a.evaluate({v, x, y}));
  }
}

TEST(LieDerivative, Examples) {
  const LieAlgebra u = catalog::u2();
  EXPECT_TRUE(lie_derivative(u, e(4, 0), d(4, {2, 3})).is_zero());
  EXPECT_TRUE(lie_derivative(u, e(4, 1), d(4, {1})).is_zero());
}

TEST(LieDerivative, DerivationAndCommutesWithD) {
  std::mt19937 rng(9);
  for (const char* id : {"u2", "gl2r"}) {
    const LieAlgebra g = get(id).algebra;
    for (int it = 0; it < 25; ++it) {
      const KForm a = random_form(rng, 4, 1), b = random_form(rng, 4, 2);
      const Vec v = random_vec(rng, 4);
      EXPECT_EQ(lie_derivative(g, v, wedge(a, b)),
                wedge(lie_derivative(g, v, a), b) + wedge(a, lie_derivative(g, v, b)));
      EXPECT_EQ(lie_derivative(g, v, ce_d(g, b)), ce_d(g, lie_derivative(g, v, b)));
      // independent formula: (L_v a)(X, Y) = -a([v,X],Y) - a(X,[v,Y])
      const Vec x = random_vec(rng, 4), y = random_vec(rng, 4);
      EXPECT_EQ(lie_derivative(g, v, b).evaluate({x, y}),
                -b.evaluate({g.bracket(v, x), y}) - b.evaluate({x, g.bracket(v, y)}));
    }
  }
}

TEST(KForm, MatrixRoundTripAndPullback) {
  const KForm w = d(4, {0, 1}) + Scalar(3) * d(4, {2, 3});
  EXPECT_EQ(KForm::from_matrix(w.as_matrix()), w);
  Mat P = Mat::identity(4);
  P(0, 0) = Scalar(-1);
  EXPECT_EQ(w.pullback(P), -d(4, {0, 1}) + Scalar(3) * d(4, {2, 3}));
}

TEST(KForm, PrintsWithBasisNames) {
  const auto u = get("u2");
  const std::vector<std::string>& names = u.algebra.names();
  EXPECT_EQ((d(4, {0, 1}) + d(4, {2, 3})).str(names), "e0^e1 + e2^e3");
  const Scalar c = -(Scalar(1) + u.param("a") * u.param("a")) / u.param("b");
  EXPECT_EQ((c * d(4, {1, 3})).str(names), "((-a^2 - 1)/b)*e1^e3");
  EXPECT_EQ((Scalar(-2) * d(4, {0})).str(names), "-2*e0");
}
