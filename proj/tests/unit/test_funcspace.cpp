#include <gtest/gtest.h>

#include "bandlab/funcspace.hpp"

using namespace bandlab;

namespace {

PAFunc pa(std::vector<std::pair<Rat, Rat>> pts) { return PAFunc(std::move(pts)); }

}  // namespace

TEST(PAFunc, CanonicalizesCollinearBreakpoints) {
  PAFunc f = pa({{Rat(-1), Rat(-1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  EXPECT_EQ(f.points().size(), 2u);
  EXPECT_EQ(f(Rat(1, 3)), Rat(1, 3));
  EXPECT_THROW(pa({{Rat(-1), Rat(0)}, {Rat(1, 2), Rat(0)}}), InputError);
}

TEST(PAFunc, MaxInsertsCrossingPoints) {
  PAFunc a = PAFunc::affine(1, 0);
  PAFunc b = PAFunc::affine(-1, 0);
  PAFunc m = PAFunc::max(a, b);
  EXPECT_EQ(m(0), 0);
  EXPECT_EQ(m(Rat(-1, 2)), Rat(1, 2));
  EXPECT_EQ(m.points().size(), 3u);
  EXPECT_EQ(PAFunc::min(a, b)(Rat(1, 2)), Rat(-1, 2));
}

TEST(ZeroSets, QuadraticAndAtoms) {
  Domain d;
  FElem q = FElem::square();
  ZeroSet z = zero_set(q, d);
  ASSERT_EQ(z.pieces.size(), 1u);
  EXPECT_EQ(z.pieces[0].lo, 0);
  FElem irr = q - FElem::from_pa(PAFunc(Rat(1, 2)));
  EXPECT_TRUE(zero_set(irr, d).omitted_irrational);
  FElem g = FElem::from_pa(pa({{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));
  g.atoms[Rat(-1, 2)] = 1;
  ZeroSet zg = zero_set(g, d);
  EXPECT_TRUE(zg.contains(Rat(-3, 4)));
  EXPECT_FALSE(zg.contains(Rat(-1, 2)));
  EXPECT_TRUE(zg.contains(0));
}

TEST(ZeroSets, RealLineAndInfinity) {
  FuncSpace s = make_space(Family::ex_quad);
  EXPECT_FALSE(is_disjoint_cover(one_function(), FElem::square(), s));
  EXPECT_TRUE(is_disjoint_cover(FElem(), FElem::square(), s));
  EXPECT_TRUE(zero_set(one_function(), s).at_infinity);
  EXPECT_FALSE(zero_set(FElem::square(), s).at_infinity);
}

TEST(ClosedSets, ComplementClosure) {
  ClosedSet z({{Rat(-1, 2), Rat(0)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}});
  EXPECT_EQ(z.closure_of_complement(), ClosedSet({{Rat(-1), Rat(-1, 2)}, {Rat(0), Rat(1)}}));
  EXPECT_EQ(ClosedSet().closure_of_complement(), ClosedSet::whole());
  EXPECT_TRUE(ClosedSet::whole().closure_of_complement().empty());
  auto p = z.point_not_in(ClosedSet::interval(Rat(-1, 2), 0));
  ASSERT_TRUE(p);
  EXPECT_TRUE(*p == -1 || *p == 1);
}

TEST(FuncSpace, Membership) {
  FuncSpace n = make_space(Family::namioka_pa);
  EXPECT_TRUE(n.contains(namioka_g()));
  EXPECT_FALSE(n.contains(tent(Rat(1), Rat(1, 2), 1)));
  FuncSpace b = make_space(Family::band_h);
  EXPECT_TRUE(b.contains(indicator_A() - h_function() + Rat(3) * atom_pair(Rat(1, 4))));
  FElem bad = indicator_A();
  bad.atoms[Rat(1, 4)] = 1;
  EXPECT_FALSE(b.contains(bad));
  EXPECT_TRUE(b.cover_contains(bad));
  EXPECT_THROW(cone_test(bad, b), InputError);
}

TEST(FuncSpace, ConeTest) {
  FuncSpace s = make_space(Family::example3_paq);
  FElem x = FElem::from_pa(PAFunc::affine(0, Rat(1, 4))) - FElem::square();
  EXPECT_FALSE(cone_test(x, s));
  EXPECT_TRUE(cone_test(FElem::from_pa(PAFunc::affine(0, 1)) - FElem::square(), s));
  FuncSpace q = make_space(Family::ex_quad);
  FElem sq = FElem::square() - FElem::from_pa(PAFunc::affine(2, -1));  // t^2 - 2t + 1
  EXPECT_TRUE(cone_test(sq, q));
  EXPECT_FALSE(cone_test(sq - FElem::from_pa(PAFunc(Rat(1, 100))), q));
}

TEST(ZIdeals, NamiokaClosures) {
  FuncSpace s = make_space(Family::namioka_pa);
  ClosedSet z = ClosedSet({{Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}});
  EXPECT_TRUE(linear_closure(z, s).contains(Rat(0)));
  ClosedSet zero = ClosedSet::point(0);
  EXPECT_EQ(linear_closure(zero, s), zero);
  EXPECT_TRUE(positive_closure(zero, s).contains(Rat(1)));
  EXPECT_TRUE(is_directed(ZIdeal{zero}, s).no());
  EXPECT_TRUE(is_directed(ZIdeal{z}, s).yes());
  auto x = element_nonzero_at(Rat(1), zero, s, false);
  ASSERT_TRUE(x);
  EXPECT_TRUE(member(*x, ZIdeal{zero}, s));
  EXPECT_FALSE(element_nonzero_at(Rat(1), zero, s, true));
}

TEST(ZIdeals, BandsInPALattice) {
  FuncSpace s = make_space(Family::pa_lattice);
  ZIdeal i{ClosedSet::interval(Rat(-1, 2), Rat(1, 2))};
  EXPECT_TRUE(is_band(i, s).yes());
  ZIdeal pt{ClosedSet::point(0)};
  EXPECT_TRUE(is_band(pt, s).no());
  EXPECT_TRUE(is_s_closed(i, s).yes());
  EXPECT_TRUE(is_s_closed(pt, s).no());
}

TEST(OConv, NamiokaCertificateAndPrintedDominator) {
  FuncSpace s = make_space(Family::namioka_pa);
  ZIdeal i{ClosedSet({{Rat(-1, 2), Rat(0)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}})};
  for (long n = 2; n <= 6; ++n) {
    EXPECT_TRUE(member(namioka_g_n(n), i, s));
    EXPECT_TRUE(s.contains(namioka_u_n(n)));
    EXPECT_EQ(namioka_g_n(n).at(Rat(-1) + Rat(1, n + 2)), namioka_g().at(Rat(-1) + Rat(1, n + 2)));
  }
  EXPECT_FALSE(s.contains(namioka_u_n_printed(2)));
  EXPECT_FALSE(nonnegative(namioka_u_n_printed(2), s.domain));
  OConvCertificate c;
  c.member = namioka_g_n;
  c.dominator = namioka_u_n;
  c.limit = namioka_g();
  c.exceptional = {Rat(-1), Rat(0), Rat(1)};
  c.n0 = 2;
  c.n1 = 12;
  auto in_i = [&](const FElem& x) { return member(x, i, s); };
  EXPECT_TRUE(verify_not_o_closed_certificate(c, in_i, s).valid);
  ZIdeal band{ClosedSet::interval(Rat(-1, 2), 0)};
  auto in_band = [&](const FElem& x) { return member(x, band, s); };
  OConvCheck r = verify_not_o_closed_certificate(c, in_band, s);
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.failure, "limit lies in W");
  c.dominator = namioka_u_n_printed;
  OConvCheck p = verify_not_o_closed_certificate(c, in_i, s);
  EXPECT_FALSE(p.valid);
  EXPECT_EQ(p.failed_n, 2);
}

TEST(AtomSpaces, ComplementsAndBands) {
  FuncSpace s = make_space(Family::band_h);
  AtomSubspace b;
  b.atoms_free = true;
  AtomSubspace bd = disjoint_complement(b, s);
  EXPECT_TRUE(bd.contains(h_function(), s));
  EXPECT_FALSE(bd.contains(atom_pair(Rat(1, 2)), s));
  AtomSubspace bdd = band_generated(b, s);
  EXPECT_TRUE(bdd.contains(indicator_A() - h_function(), s));
  EXPECT_TRUE(is_disjoint_cover(h_function(), indicator_A() - h_function(), s));
  EXPECT_TRUE(is_band(bdd, s).yes());
  EXPECT_EQ(band_generated(bdd, s), bdd);
  FuncSpace e = make_space(Family::ex1_atom);
  AtomSubspace whole;
  whole.head = SubspaceBasis::whole(2);
  whole.atoms_free = true;
  EXPECT_TRUE(is_band(whole, e).yes());
}

TEST(AtomSpaces, FiniteSectionAgreesWithCover) {
  FuncSpace s = make_space(Family::band_h);
  FiniteSection fs = finite_section(s, 2);
  EXPECT_EQ(fs.space.m(), 5u);
  FElem x = atom_pair(fs.atom_points[0]);
  FElem y = atom_pair(fs.atom_points[1]);
  EXPECT_FALSE(is_disjoint_def(fs.coords(x, s), fs.coords(y, s), fs.space));
  EXPECT_FALSE(is_disjoint_cover(x, y, s));
  FElem h = h_function();
  EXPECT_TRUE(is_disjoint_def(fs.coords(h, s), fs.coords(x, s), fs.space));
}

TEST(Sups, AtomFamily) {
  FuncSpace s = make_space(Family::ex1_atom);
  FamilySup r = sup_parametric_family(ParamFamily{}, s);
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.sup, indicator_A());
  ParamFamily half;
  half.alpha = Rat(1, 2);
  EXPECT_EQ(sup_parametric_family(half, make_space(Family::band_h)).sup,
            Rat(1, 2) * (indicator_A() - h_function()));
}

TEST(Pervasive, MinorantsAndBlockers) {
  FuncSpace s = make_space(Family::namioka_pa);
  auto r = pervasive_func(s, {FElem::square(), tent(Rat(1, 2), Rat(1, 64), 1)});
  EXPECT_TRUE(r.yes());
  EXPECT_EQ(r.get<long>("samples_certified"), 2);
  EXPECT_TRUE(pervasive_func(make_space(Family::ex_quad)).no());
  EXPECT_TRUE(pervasive_func(make_space(Family::ex1_atom)).no());
}

TEST(Rdp, Example3RefutationAndNamiokaSearch) {
  FuncSpace s = make_space(Family::example3_paq);
  FElem x1 = FElem::from_pa(PAFunc({{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));
  FElem x2 = FElem::from_pa(PAFunc({{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}}));
  EXPECT_TRUE(rdp_refute_example3(x1, x2, FElem::square(), s).no());
  EXPECT_TRUE(rdp_refute_example3(x1, x2, Rat(1, 2) * x1, s).unknown());
  auto n = rdp_search_namioka(make_space(Family::namioka_pa), 30, 5);
  EXPECT_FALSE(n.yes());
}

TEST(Examples, FaConstructor) {
  CoverPointFunction f{Rat(1), {{Rat(1, 2), Rat(3)}, {Rat(2), Rat(2)}}};
  for (const Rat& a : {Rat(0), Rat(1, 2), Rat(1)}) {
    FElem fa = ex1_f_a(f, a);
    FuncSpace s = make_space(Family::ex1_atom);
    EXPECT_TRUE(s.contains(fa));
    EXPECT_EQ(fa.at(a), f.at(a));
    EXPECT_EQ(fa.at_extra(), f.at(2));
    for (const Rat& t : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(1)}) EXPECT_GE(fa.at(t), f.at(t));
  }
}

TEST(Examples, ZFormula) {
  FElem s = z_formula(1, 2, 2, -1);
  EXPECT_EQ(s.at(-1), 2);
  EXPECT_EQ(s.at(Rat(-1, 2)), 3);
}

TEST(Examples, UnknownNameIsInputError) { EXPECT_THROW(make_example("nope"), InputError); }
