#include <gtest/gtest.h>

#include "bandlab/lp.hpp"
#include "bandlab/polyhedron.hpp"

using namespace bandlab;

namespace {

RVec v(std::initializer_list<long> xs) {
  RVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rat("6/4"), Rat(3, 2));
  EXPECT_EQ(parse_rat("-3"), Rat(-3));
  EXPECT_EQ(to_string(parse_rat("-10/4")), "-5/2");
  EXPECT_THROW(parse_rat("1.5"), InputError);
  EXPECT_THROW(parse_rat("1/0"), InputError);
  EXPECT_THROW(parse_rat(""), InputError);
}

TEST(Lp, MinimumOnSimplexCorner) {
  HPoly p(2, {v({1, 0}), v({0, 1}), v({1, 1})}, v({0, 0, 1}));
  LpResult r = lp_optimize(v({1, 0}), p, Sense::minimize);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(*r.value, 0);
  EXPECT_EQ(*r.witness, v({0, 1}));
  EXPECT_TRUE(lp_certificate_valid(v({1, 0}), p, Sense::minimize, r));
}

TEST(Lp, UnboundedHasImprovingRay) {
  HPoly p(1, {v({1})}, v({0}));
  LpResult r = lp_optimize(v({1}), p, Sense::maximize);
  ASSERT_EQ(r.status, LpStatus::unbounded);
  EXPECT_TRUE(lp_certificate_valid(v({1}), p, Sense::maximize, r));
}

TEST(Lp, InfeasibleHasFarkasCertificate) {
  HPoly p(1, {v({1}), v({-1})}, v({1, 0}));
  LpResult r = lp_optimize(v({1}), p, Sense::minimize);
  ASSERT_EQ(r.status, LpStatus::infeasible);
  EXPECT_TRUE(lp_certificate_valid(v({1}), p, Sense::minimize, r));
  EXPECT_FALSE(lp_feasible_point(p).has_value());
}

TEST(Lp, DegenerateMaximumWithRedundantRows) {
  // Square [0,1]^2 with duplicated rows; max x + y = 2.
  HPoly p(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1}), v({-1, 0}), v({-1, -1})},
          v({0, 0, -1, -1, -1, -2}));
  LpResult r = lp_optimize(v({1, 1}), p, Sense::maximize);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(*r.value, 2);
  EXPECT_TRUE(lp_certificate_valid(v({1, 1}), p, Sense::maximize, r));
}

TEST(DoubleDescription, QuadrantRays) {
  VPoly g = dd_convert(HPoly::cone(2, {v({1, 0}), v({0, 1})}));
  ASSERT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(g.vertices[0], v({0, 0}));
  EXPECT_EQ(g.rays, (RMat{v({0, 1}), v({1, 0})}));
  EXPECT_TRUE(g.lineality.empty());
}

TEST(DoubleDescription, FourRayConeFacets) {
  VPoly cone{3, {v({0, 0, 0})}, {v({1, 0, 1}), v({0, 1, 1}), v({-1, 0, 1}), v({0, -1, 1})}, {}};
  HPoly h = dd_convert(cone);
  EXPECT_EQ(h.rows(), 4u);
  RMat normals = h.a();
  std::sort(normals.begin(), normals.end(), lex_less);
  EXPECT_EQ(normals, (RMat{v({-1, -1, 1}), v({-1, 1, 1}), v({1, -1, 1}), v({1, 1, 1})}));
  VPoly back = dd_convert(h);
  EXPECT_EQ(back.rays.size(), 4u);
  EXPECT_EQ(back.vertices, (RMat{v({0, 0, 0})}));
}

TEST(DoubleDescription, HalfSpaceHasLineality) {
  VPoly g = dd_convert(HPoly::cone(2, {v({1, 0})}));
  EXPECT_EQ(g.rays, (RMat{v({1, 0})}));
  EXPECT_EQ(g.lineality, (RMat{v({0, 1})}));
}

TEST(DoubleDescription, BoundedPolytopeVertices) {
  HPoly sq(2, {v({1, 0}), v({0, 1}), v({-1, 0}), v({0, -1})}, v({0, 0, -2, -3}));
  VPoly g = dd_convert(sq);
  EXPECT_EQ(g.vertices, (RMat{v({0, 0}), v({0, 3}), v({2, 0}), v({2, 3})}));
  EXPECT_TRUE(g.rays.empty());
  EXPECT_TRUE(poly_equal(dd_convert(g), sq));
}

TEST(DoubleDescription, EmptyPolyhedron) {
  HPoly p(1, {v({1}), v({-1})}, v({1, 0}));
  EXPECT_TRUE(dd_convert(p).empty());
}

TEST(PolySubset, DetectsContainmentAndWitness) {
  HPoly quad = HPoly::cone(2, {v({1, 0}), v({0, 1})});
  HPoly half = HPoly::cone(2, {v({1, 0})});
  EXPECT_TRUE(poly_subset(quad, half).holds);
  SubsetResult r = poly_subset(half, quad);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(half.contains(*r.witness));
  EXPECT_FALSE(quad.contains(*r.witness));
  SubsetResult rv = poly_subset(dd_convert(half), quad);
  ASSERT_FALSE(rv.holds);
  EXPECT_FALSE(quad.contains(*rv.witness));
}
