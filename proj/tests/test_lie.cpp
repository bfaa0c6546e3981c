#include <gtest/gtest.h>

#include "lck/catalog.hpp"

using namespace lck;

namespace {

Vec e(std::size_t n, std::size_t i) { return unit_vector<Scalar>(n, i); }

bool same_span(const Subspace& s, const std::vector<Vec>& vs) {
  const Subspace t(s.ambient_dim(), vs);
  return s.dim() == t.dim() && s.contains(t);
}

}  // namespace

TEST(LieAlgebra, CatalogAlgebrasSatisfyJacobi) {
  for (const char* id : {"u2", "gl2r", "su2", "sl2r", "abelian_4"}) {
    auto entry = get(id);
    EXPECT_EQ(check_jacobi(entry.algebra).verdict, Verdict::Pass) << id;
  }
}

TEST(LieAlgebra, BracketTablesMatchDefinitions) {
  const LieAlgebra u = catalog::u2();
  EXPECT_EQ(u.bracket(e(4, 1), e(4, 2)), Scalar(-1) * e(4, 3));
  EXPECT_EQ(u.bracket(e(4, 2), e(4, 3)), Scalar(-1) * e(4, 1));
  EXPECT_EQ(u.bracket(e(4, 3), e(4, 1)), Scalar(-1) * e(4, 2));
  const LieAlgebra gl = catalog::gl2r();
  EXPECT_EQ(gl.bracket(e(4, 1), e(4, 2)), Scalar(2) * e(4, 2));
  EXPECT_EQ(gl.bracket(e(4, 1), e(4, 3)), Scalar(-2) * e(4, 3));
  EXPECT_EQ(gl.bracket(e(4, 2), e(4, 3)), e(4, 1));
}

TEST(LieAlgebra, CorruptedTableFailsWithWitness) {
  LieAlgebra u = catalog::u2();
  u.set_structure(1, 2, e(4, 3));  // flip only [e1,e2]
  const CheckEntry r = check_jacobi(u);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_NE(r.detail.find("(e1,e2)"), std::string::npos) << r.detail;

  LieAlgebra bad({"e0", "e1", "e2", "e3"});
  bad.set_bracket(1, 2, e(4, 3));
  bad.set_bracket(1, 3, e(4, 1));
  const CheckEntry j = check_jacobi(bad);
  EXPECT_EQ(j.verdict, Verdict::Fail);
  EXPECT_NE(j.detail.find("Jacobi"), std::string::npos) << j.detail;
}

TEST(LieAlgebra, Centralizers) {
  const LieAlgebra u = catalog::u2();
  const Subspace z1 = centralizer(u, e(4, 1));
  EXPECT_EQ(z1.dim(), 2u);
  EXPECT_TRUE(same_span(z1, {e(4, 0), e(4, 1)}));
  const LieAlgebra gl = catalog::gl2r();
  const Subspace zh = centralizer(gl, e(4, 1));
  EXPECT_TRUE(same_span(zh, {e(4, 0), e(4, 1)}));
  // central vector: everything
  EXPECT_EQ(centralizer(u, e(4, 0)).dim(), 4u);
  try {
    centralizer(u, Vec(4));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ZeroVector);
  }
}

TEST(LieAlgebra, CentralizerContainsVectorAndCenter) {
  for (const char* id : {"u2", "gl2r"}) {
    const LieAlgebra g = get(id).algebra;
    const Subspace z = center(g);
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = 0; c <= 2; ++c) {
          const Vec v{Scalar(1), Scalar(a), Scalar(b), Scalar(c)};
          const Subspace cv = centralizer(g, v);
          EXPECT_TRUE(cv.contains(v));
          EXPECT_TRUE(cv.contains(z));
        }
  }
}

TEST(LieAlgebra, Centers) {
  EXPECT_TRUE(same_span(center(catalog::u2()), {e(4, 0)}));
  EXPECT_TRUE(same_span(center(catalog::gl2r()), {e(4, 0)}));
  EXPECT_EQ(center(catalog::abelian(4)).dim(), 4u);
  EXPECT_EQ(center(catalog::su2()).dim(), 0u);
  EXPECT_EQ(derived_algebra(catalog::gl2r()).dim(), 3u);
}

TEST(LieAlgebra, Derivations) {
  const LieAlgebra u = catalog::u2();
  EXPECT_TRUE(is_derivation(u, u.ad(Vec{1, 2, -1, 3})).ok);
  const auto idu = is_derivation(u, Mat::identity(4));
  EXPECT_FALSE(idu.ok);
  EXPECT_EQ(idu.witness_str, "(e1,e2)");
  EXPECT_TRUE(is_derivation(catalog::abelian(2), Mat::identity(2)).ok);
}

TEST(LieAlgebra, ExtendAbelianLineGivesAffineAlgebra) {
  const auto ext = extend_by_derivation(catalog::abelian(1), Mat::identity(1), "D");
  EXPECT_EQ(ext.algebra.dim(), 2u);
  EXPECT_EQ(ext.algebra.bracket(e(2, 0), e(2, 1)), e(2, 1));
  EXPECT_EQ(check_jacobi(ext.algebra).verdict, Verdict::Pass);
}

TEST(LieAlgebra, ExtendSu2ByZeroGivesU2) {
  const LieAlgebra s = catalog::su2();
  const auto ext = extend_by_derivation(s, Mat(3, 3));
  const LieAlgebra u = catalog::u2();
  EXPECT_EQ(ext.algebra.names(), u.names());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(ext.algebra.structure(i, j), u.structure(i, j));
  EXPECT_TRUE(ce_d(ext.algebra, ext.lambda).is_zero());
}

TEST(LieAlgebra, ExtendSu2ByInnerDerivation) {
  const LieAlgebra s = catalog::su2();
  const auto ext = extend_by_derivation(s, s.ad(e(3, 0)));
  EXPECT_EQ(ext.algebra.dim(), 4u);
  EXPECT_EQ(check_jacobi(ext.algebra).verdict, Verdict::Pass);
  EXPECT_TRUE(ce_d(ext.algebra, ext.lambda).is_zero());
  EXPECT_THROW(extend_by_derivation(s, Mat::identity(3)), Error);
}

TEST(Subspace, IntersectionAndMembership) {
  const Subspace a(3, {e(3, 0), e(3, 1)});
  const Subspace b(3, {e(3, 1), e(3, 2)});
  const Subspace c = a.intersect(b);
  EXPECT_EQ(c.dim(), 1u);
  EXPECT_TRUE(c.contains(e(3, 1)));
  EXPECT_FALSE(a.contains(e(3, 2)));
  const Subspace dup(3, {e(3, 0), Scalar(2) * e(3, 0)});
  EXPECT_EQ(dup.dim(), 1u);
}
