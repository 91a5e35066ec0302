#include <algorithm>

#include "bandlab/funcspace.hpp"

namespace bandlab {

Rat CoverPointFunction::at(const Rat& t) const {
  auto it = values.find(t);
  return it == values.end() ? generic : it->second;
}

Rat CoverPointFunction::sup_norm() const {
  Rat m = rat_abs(generic);
  for (const auto& [t, v] : values) m = std::max(m, rat_abs(v));
  if (values.find(Rat(2)) == values.end()) m = std::max(m, rat_abs(generic));
  return m;
}

FElem ex1_f_a(const CoverPointFunction& f, const Rat& a) {
  if (a < 0 || a > 1) throw InputError("ex1_f_a: a must lie in [0,1]");
  if (f.generic < 0) throw InputError("ex1_f_a: f must be nonnegative");
  for (const auto& [t, v] : f.values) {
    if (v < 0) throw InputError("ex1_f_a: f must be nonnegative");
    if (t != 2 && (t < 0 || t > 1)) throw InputError("ex1_f_a: point outside A");
  }
  const Rat norm = f.sup_norm();
  const Rat fa = f.at(a), f2 = f.at(2);
  const Rat b = a == 0 ? Rat(1) : Rat(0);
  if (fa == f2) return norm * indicator_A() + (fa - norm) * atom_pair(a);
  const Rat level = fa < f2 ? norm : Rat(2 * norm);
  return level * indicator_A() + (fa - level) * atom_pair(a) + (f2 - fa) * atom_pair(b);
}

FElem z_formula(const Rat& c1, const Rat& l1, const Rat& c2, const Rat& l2) {
  Rat m = std::max(c1, c2);
  Rat top = std::max(c1 + l1, c2 + l2);
  return m * indicator_A() + (top - m) * h_function();
}

bool ExampleReport::ok() const {
  return std::all_of(flags.begin(), flags.end(), [](const FlagRow& f) { return f.matches(); });
}

std::vector<std::string> example_names() {
  return {"namioka1", "namioka2", "namioka3", "ex_quad", "ex1_atom", "band_h", "example3"};
}

namespace {

PredicateResult from_bool(bool b, std::string why) {
  return PredicateResult(b ? Verdict::yes : Verdict::no).because(std::move(why));
}

void flag(ExampleReport& r, std::string name, Verdict expected, PredicateResult computed) {
  r.flags.push_back({std::move(name), expected, std::move(computed)});
}

ZIdeal namioka_ideal() {
  return ZIdeal{ClosedSet({{Rat(-1, 2), Rat(0)}, {Rat(-1), Rat(-1)}, {Rat(1), Rat(1)}})};
}

PredicateResult zero_set_ideal_is_ideal(const ZIdeal& i) {
  return PredicateResult(Verdict::yes)
      .because("in the cover C[-1,1], x is dominated by y iff |x| <= |y|; vanishing on " + i.zeros.describe() +
               " passes to dominated elements");
}

ExampleReport namioka1() {
  ExampleReport r;
  r.name = "namioka1";
  r.space = make_space(Family::namioka_pa);
  const auto& s = r.space;
  ZIdeal i = namioka_ideal();
  ZIdeal id = disjoint_complement(i, s);
  ZIdeal idd = band_generated(i, s);
  FElem g = namioka_g();
  r.elements["g"] = g;
  flag(r, "I_is_ideal", Verdict::yes, zero_set_ideal_is_ideal(i));
  flag(r, "I_s_closed", Verdict::yes, is_s_closed(i, s));
  flag(r, "I_band", Verdict::no, is_band(i, s));
  flag(r, "I_d_zero_set_is_[-1,-1/2]u[0,1]", Verdict::yes,
       from_bool(id.zeros == ClosedSet({{Rat(-1), Rat(-1, 2)}, {Rat(0), Rat(1)}}), "I^d vanishes on " + id.zeros.describe()));
  flag(r, "I_dd_zero_set_is_[-1/2,0]", Verdict::yes,
       from_bool(idd.zeros == ClosedSet::interval(Rat(-1, 2), 0), "I^dd vanishes on " + idd.zeros.describe()));
  flag(r, "g_in_I_dd_not_in_I", Verdict::yes,
       from_bool(member(g, idd, s) && !member(g, i, s), "membership by zero sets"));
  Rat forced = (rat_abs(g.at(-1)) + rat_abs(g.at(1))) / 2;
  flag(r, "g_and_minus_g_bounded_in_I_dd", Verdict::no,
       PredicateResult(forced > 0 && linear_closure(idd.zeros, s).contains(Rat(0)) ? Verdict::no : Verdict::unknown)
           .with("forced_value_at_0", forced)
           .because("an upper bound u of g and -g has u(0) = (u(-1)+u(1))/2 >= forced_value_at_0 > 0, "
                    "but I^dd vanishes at 0"));
  flag(r, "I_dd_directed", Verdict::no, is_directed(idd, s));
  std::vector<FElem> samples{FElem::from_pa(PAFunc({{Rat(-1), Rat(1)}, {Rat(-1, 2), Rat(0)}, {Rat(1), Rat(0)}})),
                             FElem::square()};
  flag(r, "pervasive", Verdict::yes, pervasive_func(s, samples));
  return r;
}

OConvCertificate namioka_certificate(bool printed) {
  OConvCertificate c;
  c.member = namioka_g_n;
  c.dominator = printed ? namioka_u_n_printed : namioka_u_n;
  c.limit = namioka_g();
  c.exceptional = {Rat(-1), Rat(0), Rat(1)};
  c.radius_constant = 1;
  c.n0 = 2;
  c.n1 = 40;
  return c;
}

ExampleReport namioka2() {
  ExampleReport r;
  r.name = "namioka2";
  r.space = make_space(Family::namioka_pa);
  const auto& s = r.space;
  ZIdeal i = namioka_ideal();
  auto in_i = [&](const FElem& x) { return member(x, i, s); };
  r.elements["g"] = namioka_g();
  r.elements["g_2"] = namioka_g_n(2);
  r.elements["u_2"] = namioka_u_n(2);
  r.elements["u_2_printed"] = namioka_u_n_printed(2);
  flag(r, "I_directed", Verdict::yes, is_directed(i, s));
  flag(r, "I_s_closed", Verdict::yes, is_s_closed(i, s));
  OConvCheck good = verify_not_o_closed_certificate(namioka_certificate(false), in_i, s);
  PredicateResult oc(good.valid ? Verdict::no : Verdict::unknown);
  oc.with("prefix_n0", 2L).with("prefix_n1", 40L);
  oc.because(good.valid ? "g_n in I order-converge to g outside I (dominators u_n = |g - g_n| on the edges "
                          "plus a tent at 0, decreasing to 0)"
                        : "certificate rejected: " + good.failure);
  flag(r, "I_o_closed", Verdict::no, oc);
  OConvCheck bad = verify_not_o_closed_certificate(namioka_certificate(true), in_i, s);
  flag(r, "printed_u_n_certificate_valid", Verdict::no,
       PredicateResult(bad.valid ? Verdict::yes : Verdict::no)
           .with("failed_n", bad.failed_n)
           .because(bad.valid ? "accepted" : "rejected: " + bad.failure));
  return r;
}

ExampleReport namioka3() {
  ExampleReport r;
  r.name = "namioka3";
  r.space = make_space(Family::namioka_pa);
  const auto& s = r.space;
  ZIdeal i = namioka_ideal();
  ZIdeal b = band_generated(i, s);
  flag(r, "B_equals_I_dd", Verdict::yes, from_bool(same_ideal(b, band_generated(i, s), s), "B is defined as I^dd"));
  flag(r, "I_plus_equals_B_plus", Verdict::yes,
       from_bool(positive_closure(i.zeros, s) == positive_closure(b.zeros, s),
                 "positive parts vanish on " + positive_closure(b.zeros, s).describe()));
  flag(r, "B_band", Verdict::yes, is_band(b, s));
  flag(r, "B_s_closed", Verdict::yes, is_s_closed(b, s));
  flag(r, "B_directed", Verdict::no, is_directed(b, s));
  return r;
}

ExampleReport ex_quad() {
  ExampleReport r;
  r.name = "ex_quad";
  r.space = make_space(Family::ex_quad);
  const auto& s = r.space;
  FElem q = FElem::square();
  FElem one = one_function();
  r.elements["q"] = q;
  auto [b, c] = q.pa.piece_coefficients(0, 0);
  bool extreme = cone_test(q, s) && b * b - 4 * q.quad * c == 0;
  flag(r, "I_is_ideal", Verdict::yes,
       from_bool(extreme, "q spans an extreme ray of K; q >= +-x forces q +- x on that ray, so x in span{q}"));
  flag(r, "I_directed", Verdict::yes, from_bool(cone_test(q, s), "I = span{q} with q >= 0"));
  flag(r, "I_solvex", Verdict::yes, from_bool(extreme && cone_test(q, s), "directed ideal"));
  flag(r, "I_o_closed", Verdict::yes,
       PredicateResult(Verdict::yes).because("X is finite-dimensional with a closed cone; subspaces are o-closed"));
  // z = t^2 + 1: the largest lambda with z - lambda q >= 0.
  FElem z = q + one;
  Rat zc = z.pa(0), za = z.quad;
  auto [zb, zc2] = z.pa.piece_coefficients(0, 0);
  (void)zc2;
  Rat lmax = zc > 0 ? Rat(za - zb * zb / (4 * zc)) : za;
  bool sup_ok = cone_test(z - lmax * q, s) && !cone_test(z - (lmax + Rat(1, 1000)) * q, s);
  flag(r, "I_s_closed", Verdict::yes,
       from_bool(sup_ok, "I n [0,z] = {lambda q : 0 <= lambda <= lambda_max} has maximum lambda_max q in I; "
                         "for z = t^2 + 1, lambda_max = " + to_string(lmax)));
  bool disjoint = is_disjoint_cover(one, q, s);
  flag(r, "I_band", Verdict::no,
       PredicateResult(disjoint ? Verdict::unknown : Verdict::no)
           .with("element", std::string("1"))
           .because("p disjoint from q vanishes off {0}, so I^d = {0} and I^dd = X contains 1, not in I"));
  flag(r, "I_dd_equals_X", Verdict::yes, from_bool(!disjoint, "I^d = {0}"));
  flag(r, "I_dd_directed", Verdict::yes,
       from_bool(cone_test(one + q, s), "X has the order unit 1 + t^2"));
  flag(r, "pervasive", Verdict::no, pervasive_func(s));
  return r;
}

ExampleReport ex1_atom() {
  ExampleReport r;
  r.name = "ex1_atom";
  r.space = make_space(Family::ex1_atom);
  const auto& s = r.space;
  AtomSubspace i;
  i.head = SubspaceBasis(2);
  i.atoms_free = true;
  FamilySup sup = sup_parametric_family(ParamFamily{}, s);
  r.elements["sup"] = sup.sup;
  PredicateResult ps = from_bool(sup.exists && sup.sup == indicator_A(), "supremum of {1_t + 1_2 : t in [0,1]}");
  for (const auto& c : sup.certificate) ps.because(c);
  flag(r, "sup_is_1_A", Verdict::yes, ps);
  flag(r, "I_directed", Verdict::yes, is_directed(i, s));
  flag(r, "I_s_closed", Verdict::no, is_s_closed(i, s));
  AtomSubspace id = disjoint_complement(i, s);
  flag(r, "I_d_is_zero", Verdict::yes,
       from_bool(id.head.dim() == 0 && !id.atoms_free, "I^d = " + describe(id, s)));
  flag(r, "I_band", Verdict::no, is_band(i, s));
  flag(r, "pervasive", Verdict::no, pervasive_func(s));
  return r;
}

ExampleReport band_h() {
  ExampleReport r;
  r.name = "band_h";
  r.space = make_space(Family::band_h);
  const auto& s = r.space;
  AtomSubspace b;
  b.head = SubspaceBasis(2);
  b.atoms_free = true;
  FElem h = h_function();
  FElem sv = indicator_A() - h;
  r.elements["h"] = h;
  r.elements["s"] = sv;
  flag(r, "B_directed", Verdict::yes, is_directed(b, s));
  AtomSubspace bd = disjoint_complement(b, s);
  AtomSubspace span_h;
  span_h.head = SubspaceBasis(2, {{Rat(0), Rat(1)}});
  flag(r, "B_d_is_span_h", Verdict::yes, from_bool(bd == canonical(span_h, s), "B^d = " + describe(bd, s)));
  flag(r, "B_band", Verdict::yes, is_band(b, s));
  FamilySup sup = sup_parametric_family(ParamFamily{}, s);
  PredicateResult ps = from_bool(sup.exists && sup.sup == sv, "sup(B n [0,s]) via the atom family");
  for (const auto& c : sup.certificate) ps.because(c);
  flag(r, "sup_B_section_is_s", Verdict::yes, ps);
  flag(r, "s_not_in_B", Verdict::yes, from_bool(!b.contains(sv, s), "s has c = 1"));
  flag(r, "B_s_closed", Verdict::no, is_s_closed(b, s));
  flag(r, "pervasive", Verdict::no, pervasive_func(s));
  // Independent evidence for the band verdict: disjointness of h and s from
  // the definition, on the finite section with two atom points.
  FiniteSection fs = finite_section(s, 2);
  bool def = is_disjoint_def(fs.coords(h, s), fs.coords(sv, s), fs.space);
  bool cov = is_disjoint_cover(h, sv, s);
  r.notes.push_back(std::string("h and s = 1_A - h are ") + (def ? "disjoint" : "not disjoint") +
                    " by the upper-bound definition on a finite section, and " + (cov ? "disjoint" : "not disjoint") +
                    " in the cover Y; hence s lies in B^dd = " + describe(band_generated(b, s), s));
  return r;
}

ExampleReport example3() {
  ExampleReport r;
  r.name = "example3";
  r.space = make_space(Family::example3_paq);
  const auto& s = r.space;
  FElem x1 = FElem::from_pa(PAFunc({{Rat(-1), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));
  FElem x2 = FElem::from_pa(PAFunc({{Rat(-1), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}}));
  FElem q = FElem::square();
  r.elements["x1"] = x1;
  r.elements["x2"] = x2;
  r.elements["q"] = q;
  std::vector<FElem> samples{q, x1, tent(Rat(1, 3), Rat(1, 100), 1)};
  flag(r, "pervasive", Verdict::yes, pervasive_func(s, samples));
  flag(r, "rdp", Verdict::no, rdp_refute_example3(x1, x2, q, s));
  for (const auto& [label, pts] :
       std::vector<std::pair<std::string, std::vector<Rat>>>{{"case1", {Rat(1, 3)}},
                                                             {"case2", {Rat(-1, 2), Rat(0), Rat(1, 2)}}}) {
    std::vector<std::pair<Rat, Rat>> iv;
    for (const auto& p : pts) iv.push_back({p, p});
    ZIdeal i{ClosedSet(iv)};
    flag(r, label + "_I_band", Verdict::no, is_band(i, s));
    ParamFamily fam;
    fam.kind = ParamFamily::Kind::tent_sequence;
    fam.points = pts;
    FamilySup sup = sup_parametric_family(fam, s);
    PredicateResult ps = from_bool(sup.exists && sup.sup == one_function(), "f_n increases to 1");
    for (const auto& c : sup.certificate) ps.because(c);
    flag(r, label + "_sup_f_n_is_1", Verdict::yes, ps);
    OConvCertificate cert;
    cert.member = [pts](long n) { return tent_sequence_member(pts, n); };
    cert.dominator = [pts](long n) { return one_function() - tent_sequence_member(pts, n); };
    cert.limit = one_function();
    cert.exceptional = pts;
    OConvCheck chk = verify_not_o_closed_certificate(cert, [&](const FElem& x) { return member(x, i, s); }, s);
    flag(r, label + "_I_o_closed", Verdict::no,
         PredicateResult(chk.valid ? Verdict::no : Verdict::unknown)
             .because(chk.valid ? "f_n in I order-converge to 1 outside I" : "certificate rejected: " + chk.failure));
  }
  return r;
}

}  // namespace

ExampleReport make_example(const std::string& name) {
  if (name == "namioka1") return namioka1();
  if (name == "namioka2") return namioka2();
  if (name == "namioka3") return namioka3();
  if (name == "ex_quad") return ex_quad();
  if (name == "ex1_atom") return ex1_atom();
  if (name == "band_h") return band_h();
  if (name == "example3") return example3();
  throw InputError("unknown example '" + name + "'");
}

}  // namespace bandlab
