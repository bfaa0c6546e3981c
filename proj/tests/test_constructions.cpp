#include <gtest/gtest.h>

#include "lck/catalog.hpp"
#include "lck/constructions.hpp"

using namespace lck;

namespace {

KForm d(std::size_t n, std::initializer_list<std::size_t> idx) {
  KForm f(n, idx.size());
  f.set(Index(idx), Scalar(1));
  return f;
}

Vec e(std::size_t n, std::size_t i) { return unit_vector<Scalar>(n, i); }

// e0 -> -e0, an automorphism whenever e0 is central
Mat flip_first(std::size_t n) {
  Mat P = Mat::identity(n);
  P(0, 0) = Scalar(-1);
  return P;
}

}  // namespace

TEST(Coadjoint, Su2) {
  const OrbitData o = coadjoint_stabilizer(catalog::su2(), d(3, {0}));
  EXPECT_EQ(o.k.dim(), 1u);
  EXPECT_TRUE(o.k.contains(e(3, 0)));
  EXPECT_EQ(o.h.dim(), 0u);
  EXPECT_EQ(o.omega_Q.at({1, 2}), Scalar(-1));
  EXPECT_TRUE(o.non_conical);
}

TEST(Coadjoint, AbelianAndSl2) {
  const OrbitData a = coadjoint_stabilizer(catalog::abelian(3), d(3, {1}));
  EXPECT_EQ(a.k.dim(), 3u);
  EXPECT_TRUE(a.omega_Q.is_zero());
  EXPECT_EQ(a.h.dim(), 2u);

  const OrbitData s = coadjoint_stabilizer(catalog::sl2r(), d(3, {1}) - d(3, {2}));
  EXPECT_EQ(s.k.dim(), 1u);
  EXPECT_TRUE(s.k.contains(Vec{0, 1, -1}));
  EXPECT_TRUE(s.non_conical);
  // nondegenerate on the complement {h, e+}
  EXPECT_FALSE(s.omega_Q.at({0, 1}).is_zero());

  try {
    coadjoint_stabilizer(catalog::su2(), KForm(3, 1));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ZeroForm);
  }
}

TEST(OrbitLcs, Su2GivesU2Family) {
  const OrbitData o = coadjoint_stabilizer(catalog::su2(), d(3, {0}));
  const OrbitLcs r = lcs_from_orbit(o, Mat(3, 3));
  const LieAlgebra u = catalog::u2();
  ASSERT_EQ(r.algebra.names(), u.names());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(r.algebra.structure(i, j), u.structure(i, j));
  EXPECT_EQ(r.omega, -d(4, {0, 1}) + d(4, {2, 3}));
  EXPECT_EQ(r.lcs.lambda, d(4, {0}));
  // relabel e0 -> -e0 to land on the catalog form and Lee form
  EXPECT_EQ(r.omega.pullback(flip_first(4)), get("u2").form("omega"));
  EXPECT_EQ(r.lambda.pullback(flip_first(4)), get("u2").form("lambda"));
  EXPECT_TRUE(r.report.all_passed()) << r.report.text();
}

TEST(OrbitLcs, Sl2GivesGl2TheoremForm) {
  const OrbitData o = coadjoint_stabilizer(catalog::sl2r(), d(3, {1}) - d(3, {2}));
  const OrbitLcs r = lcs_from_orbit(o, Mat(3, 3));
  const auto gl = get("gl2r");
  ASSERT_EQ(r.algebra.names(), gl.algebra.names());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(r.algebra.structure(i, j), gl.algebra.structure(i, j));
  EXPECT_EQ(r.omega.pullback(flip_first(4)), gl.form("omega_thm_i"));
  EXPECT_TRUE(r.report.all_passed()) << r.report.text();
}

TEST(OrbitLcs, Su2WithInnerDerivation) {
  const LieAlgebra s = catalog::su2();
  const OrbitData o = coadjoint_stabilizer(s, d(3, {0}));
  const OrbitLcs r = lcs_from_orbit(o, s.ad(e(3, 0)));
  EXPECT_EQ(check_jacobi(r.algebra).verdict, Verdict::Pass);
  EXPECT_TRUE(ce_d(r.algebra, r.lcs.lambda).is_zero());
  EXPECT_TRUE(r.lcs.lambda.evaluate({r.lcs.Z}).is_zero());
  EXPECT_TRUE(r.report.all_passed()) << r.report.text();
  bool skipped = false;
  for (const auto& c : r.report.entries()) skipped |= c.verdict == Verdict::Skipped;
  EXPECT_TRUE(skipped);
}

TEST(OrbitLcs, Errors) {
  const LieAlgebra s = catalog::su2();
  const OrbitData o = coadjoint_stabilizer(s, d(3, {0}));
  try {
    lcs_from_orbit(o, Mat::identity(3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotADerivation);
  }
  OrbitData conical = o;
  conical.non_conical = false;
  try {
    lcs_from_orbit(conical, Mat(3, 3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ConicalOrbit);
  }
  // abelian orbit: omega = -lambda ^ phi has rank 2 on a 4-dim quotient
  const OrbitData ab = coadjoint_stabilizer(catalog::abelian(3), d(3, {0}));
  try {
    OrbitData no_h = ab;
    no_h.h = Subspace(3, {});
    lcs_from_orbit(no_h, Mat(3, 3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::DegenerateOnQuotient);
  }
}

TEST(OrbitLcs, RelativeCaseWithIsotropy) {
  // abelian g' with phi' = e^0: k = g', h = ker phi' = span{e1, e2}; the
  // quotient g(D)/h is 2-dimensional and omega = -lambda ^ phi is symplectic there
  const OrbitData ab = coadjoint_stabilizer(catalog::abelian(3), d(3, {0}));
  const OrbitLcs r = lcs_from_orbit(ab, Mat(3, 3), "D");
  EXPECT_EQ(r.algebra.h_basis().size(), 2u);
  EXPECT_EQ(r.lcs.complement, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(r.report.all_passed()) << r.report.text();
}
