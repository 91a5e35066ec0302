#include <gtest/gtest.h>

#include "bandlab/ideals.hpp"

using namespace bandlab;

namespace {

RVec v(std::initializer_list<long> xs) {
  RVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

PolySpace quadrant() { return build_space({ConeSpec::Kind::rays, 2, {v({1, 0}), v({0, 1})}}); }

PolySpace k4() {
  return build_space({ConeSpec::Kind::inequalities, 3,
                      {v({-1, -1, 1}), v({1, -1, 1}), v({1, 1, 1}), v({-1, 1, 1})}});
}

const RVec r1 = v({1, 0, 1}), r2 = v({0, 1, 1}), r3 = v({-1, 0, 1}), r4 = v({0, -1, 1});

SubspaceBasis span(std::size_t n, RMat rows) { return SubspaceBasis(n, rows); }

}  // namespace

TEST(BuildSpace, QuadrantIsSelfDual) {
  PolySpace q = quadrant();
  EXPECT_EQ(q.m(), 2u);
  EXPECT_EQ(q.F, (RMat{v({1, 0}), v({0, 1})}));
}

TEST(BuildSpace, FourRayConeFromRaysAndInequalities) {
  PolySpace a = build_space({ConeSpec::Kind::rays, 3, {r1, r2, r3, r4}});
  PolySpace b = k4();
  EXPECT_EQ(a.m(), 4u);
  RMat fa = a.F, fb = b.F;
  std::sort(fa.begin(), fa.end(), lex_less);
  std::sort(fb.begin(), fb.end(), lex_less);
  EXPECT_EQ(fa, fb);
  EXPECT_EQ(b.F[0], v({-1, -1, 1}));
  EXPECT_EQ(b.cone_v.size(), 4u);
}

TEST(BuildSpace, RejectsLinesAndFlatCones) {
  try {
    build_space({ConeSpec::Kind::rays, 2, {v({1, 0}), v({-1, 0})}});
    FAIL();
  } catch (const NotPointed& e) {
    EXPECT_FALSE(is_zero(e.witness));
  }
  EXPECT_THROW(build_space({ConeSpec::Kind::rays, 2, {v({1, 1})}}), NotGenerating);
  EXPECT_THROW(build_space({ConeSpec::Kind::inequalities, 2, {v({1, 0})}}), NotPointed);
  EXPECT_THROW(build_space({ConeSpec::Kind::inequalities, 2, {v({1, 0}), v({-1, 0}), v({0, 1})}}),
               NotGenerating);
}

TEST(BuildSpace, DuplicatesAreCanonicalized) {
  PolySpace s = build_space({ConeSpec::Kind::rays, 2, {v({2, 0}), v({1, 0}), v({0, 3}), v({1, 1})}});
  EXPECT_EQ(s.m(), 2u);
  EXPECT_EQ(s.cone_v, (RMat{v({0, 1}), v({1, 0})}));
}

TEST(Order, LeqExamples) {
  EXPECT_TRUE(order_leq(v({0, 0}), v({1, 1}), quadrant()));
  PolySpace k = k4();
  EXPECT_TRUE(order_leq(v({0, 0, 0}), r1, k));
  EXPECT_FALSE(order_leq(v({0, 0, 0}), v({1, 0, 0}), k));
  EXPECT_EQ(k.embed(v({1, 0, 0})), v({-1, 1, 1, -1}));
  EXPECT_TRUE(order_leq(r2, r2, k));
}

TEST(OrderDense, Examples) {
  PolySpace k = k4();
  RMat img;
  for (std::size_t c = 0; c < 3; ++c) img.push_back(k.embed(unit(3, c)));
  EXPECT_TRUE(is_order_dense(SubspaceBasis(4, img), 4).yes());
  PredicateResult diag = is_order_dense(span(2, {v({1, 1})}), 2);
  EXPECT_TRUE(diag.no());
  EXPECT_NE(*order_dense_inf(span(2, {v({1, 1})}), v({1, 0})), v({1, 0}));
  EXPECT_TRUE(is_order_dense(SubspaceBasis::whole(3), 3).yes());
  EXPECT_TRUE(is_order_dense(span(2, {v({1, -1})}), 2).no());
}

TEST(OrderDense, OracleAgreesOnDenseImage) {
  PolySpace k = k4();
  RMat img;
  for (std::size_t c = 0; c < 3; ++c) img.push_back(k.embed(unit(3, c)));
  SubspaceBasis u(4, img);
  for (const RVec& y : {v({1, 0, 0, 0}), v({-2, 3, 1, 0}), v({5, -1, -1, 2})}) {
    EXPECT_EQ(*order_dense_inf(u, y), y);
  }
}

TEST(OrderDense, RelativeDensityChain) {
  PolySpace k = k4();
  RMat img;
  for (std::size_t c = 0; c < 3; ++c) img.push_back(k.embed(unit(3, c)));
  SubspaceBasis u(4, img);
  SubspaceBasis w = u.join(span(4, {v({1, 0, 0, 0})}));
  EXPECT_TRUE(is_order_dense_in(u, w).yes());
  EXPECT_TRUE(is_order_dense(w, 4).yes());
}

TEST(LatticeRdp, Examples) {
  EXPECT_TRUE(is_lattice_rdp(quadrant()).yes());
  EXPECT_TRUE(is_lattice_rdp(k4()).no());
  EXPECT_TRUE(is_lattice_rdp(build_space({ConeSpec::Kind::rays, 2, {v({1, 0}), v({1, 1})}})).yes());
}

TEST(RdpWitness, Examples) {
  PredicateResult q = rdp_witness_check(quadrant(), v({1, 0}), v({0, 1}), v({1, 1}));
  ASSERT_TRUE(q.yes());
  EXPECT_EQ(q.get<RVec>("z1"), v({1, 0}));
  EXPECT_EQ(q.get<RVec>("z2"), v({0, 1}));
  // K4: z = r2 below r1 + r3 = (0,0,2). The LP decides; recorded as regression.
  PredicateResult k = rdp_witness_check(k4(), r1, r3, r2);
  EXPECT_TRUE(k.no());
  EXPECT_THROW(rdp_witness_check(quadrant(), v({1, 0}), v({0, 1}), v({2, 0})), PreconditionViolated);
}

TEST(Pervasive, Examples) {
  EXPECT_TRUE(is_pervasive(quadrant()).yes());
  PredicateResult k = is_pervasive(k4());
  ASSERT_TRUE(k.no());
  EXPECT_EQ(k.get<long>("coordinate"), 1);
  EXPECT_TRUE(is_fordable(quadrant()).yes());
  EXPECT_TRUE(is_fordable(k4()).no());
}

TEST(PervasiveCertificates, QuadrantAndK4) {
  PervasiveReport q = pervasive_certificates(quadrant(), {v({1, 2})});
  ASSERT_EQ(q.samples.size(), 1u);
  EXPECT_TRUE(q.samples[0].cond_ii && q.samples[0].cond_iii && q.samples[0].cond_iv);
  EXPECT_TRUE(q.consistent);
  PervasiveReport k = pervasive_certificates(k4(), {v({1, 0, 0, 0})});
  EXPECT_TRUE(k.samples[0].empty_section);
  EXPECT_FALSE(k.samples[0].cond_iii);
  EXPECT_TRUE(k.consistent);
}

TEST(Disjoint, UpperSetExamples) {
  HPoly u = upper_set({v({1, 0})}, quadrant());
  EXPECT_EQ(u.b(), v({1, 0}));
  PolySpace k = k4();
  EXPECT_EQ(upper_set({r1, -r1}, k).b(), v({0, 2, 2, 0}));
  EXPECT_TRUE(poly_equal(upper_set({v({0, 0, 0})}, k), k.cone_h));
}

TEST(Disjoint, DefinitionAndCoverAgree) {
  PolySpace q = quadrant();
  EXPECT_TRUE(is_disjoint_def(v({1, 0}), v({0, 1}), q));
  PolySpace k = k4();
  EXPECT_EQ(k.embed(r1), v({0, 2, 2, 0}));
  EXPECT_EQ(k.embed(r3), v({2, 0, 0, 2}));
  EXPECT_TRUE(is_disjoint_def(r1, r3, k));
  EXPECT_TRUE(is_disjoint_cover(r1, r3, k));
  EXPECT_FALSE(is_disjoint_def(r1, r2, k));
  EXPECT_FALSE(is_disjoint_cover(r1, r2, k));
  EXPECT_TRUE(is_disjoint_def(r2, v({0, 0, 0}), k));
}

TEST(Disjoint, ComplementsAndBands) {
  PolySpace k = k4();
  EXPECT_EQ(disjoint_complement(RMat{r1}, k), span(3, {r3}));
  EXPECT_EQ(band_generated(RMat{r1}, k), span(3, {r1}));
  SubspaceBasis b = band_generated(RMat{r1, r2}, k);
  EXPECT_EQ(band_generated(b, k), b);
  EXPECT_TRUE(is_band(span(3, {r1}), k).yes());
  PredicateResult nb = is_band(span(2, {v({1, 1})}), quadrant());
  ASSERT_TRUE(nb.no());
}

TEST(Disjoint, RestrictionExtension) {
  RestrictionExtensionReport q = check_restriction_extension(span(2, {v({1, 0})}), quadrant());
  EXPECT_TRUE(q.extension_holds);
  EXPECT_TRUE(q.restriction_checked && q.restriction_holds);
  EXPECT_TRUE(q.identity_holds);
  RestrictionExtensionReport k = check_restriction_extension(span(3, {r1}), k4());
  EXPECT_TRUE(k.extension_holds);
  EXPECT_FALSE(k.restriction_checked);
}

TEST(Ideals, Dominates) {
  PolySpace q = quadrant();
  EXPECT_TRUE(dominates(v({2, 0}), v({1, 0}), q));
  EXPECT_FALSE(dominates(v({1, 0}), v({0, 1}), q));
  PolySpace k = k4();
  EXPECT_TRUE(dominates(r1, Rat(1, 2) * r1, k));
}

TEST(Ideals, SolidDirectedSolvex) {
  PolySpace q = quadrant();
  EXPECT_TRUE(is_solid(span(2, {v({1, 0})}), q).yes());
  PredicateResult diag = is_solid(span(2, {v({1, 1})}), q);
  ASSERT_TRUE(diag.no());
  EXPECT_TRUE(dominates(diag.get<RVec>("y"), diag.get<RVec>("x"), q));
  EXPECT_TRUE(is_solvex(span(2, {v({1, 1})}), q).no());
  EXPECT_TRUE(is_solvex(SubspaceBasis(2), q).yes());
  EXPECT_TRUE(is_directed(span(3, {r1}), k4()).yes());
  EXPECT_TRUE(is_directed(span(2, {v({1, -1})}), q).no());
}

TEST(Ideals, SectionsAndSups) {
  PolySpace q = quadrant();
  SectionDescriptor s1 = section(span(2, {v({1, 0})}), v({0, 0}), v({1, 1}), q);
  EXPECT_TRUE(s1.nonempty);
  SupResult sup1 = sup_over_set(s1, q);
  ASSERT_EQ(sup1.kind, SupResult::Kind::exists);
  EXPECT_EQ(*sup1.element, v({1, 0}));
  PolySpace k = k4();
  SectionDescriptor s2 = section(span(3, {r1}), v({0, 0, 0}), r1 + r2, k);
  VPoly seg = dd_convert(s2.alpha_region);
  ASSERT_EQ(seg.vertices.size(), 2u);
  EXPECT_EQ(s2.point(seg.vertices[0]), v({0, 0, 0}));
  EXPECT_EQ(s2.point(seg.vertices[1]), r1);
  SupResult sup2 = sup_over_set(s2, k);
  ASSERT_EQ(sup2.kind, SupResult::Kind::exists);
  EXPECT_EQ(*sup2.element, r1);
}

TEST(Ideals, SClosedness) {
  PolySpace q = quadrant();
  EXPECT_TRUE(is_s_closed(span(2, {v({1, 0})}), q).yes());
  PolySpace k = k4();
  PredicateResult r = is_s_closed(span(3, {r1}), k);
  EXPECT_FALSE(r.unknown());
  EXPECT_TRUE(is_o_closed(span(3, {r1}), k).yes());
}

TEST(Ideals, DirectedSections) {
  PolySpace q = quadrant();
  EXPECT_TRUE(directed_section_check(SubspaceBasis::whole(2), v({1, 1}), q).yes());
  PredicateResult k = directed_section_check(SubspaceBasis::whole(3), r1 + r2 + r3 + r4, k4());
  EXPECT_FALSE(k.unknown());
}

TEST(TheoremSuite, LatticeInstanceIsConsistent) {
  PolySpace q = quadrant();
  TheoremSuiteReport rep = theorem_suite(
      q, {{"x-axis", span(2, {v({1, 0})})}, {"zero", SubspaceBasis(2)}, {"all", SubspaceBasis::whole(2)}});
  EXPECT_TRUE(rep.ok());
  for (const auto& row : rep.rows) {
    EXPECT_TRUE(row.band.yes());
    EXPECT_TRUE(row.s_closed.yes());
    EXPECT_TRUE(row.o_closed.yes());
  }
}
