#include "bandlab/ideals.hpp"

#include <algorithm>
#include <functional>

#include "bandlab/generator.hpp"
#include "bandlab/lp.hpp"

namespace bandlab {

namespace {

// Rows F_j B^T: the cover functionals in the basis coordinates of W.
RMat alpha_functionals(const SubspaceBasis& w, const PolySpace& s) {
  if (w.ambient() != s.n) throw DimensionMismatch("subspace has wrong ambient dimension");
  RMat out;
  for (const auto& f : s.F) {
    RVec row;
    for (const auto& b : w.basis()) row.push_back(dot(f, b));
    out.push_back(std::move(row));
  }
  return out;
}

RVec from_alpha(const SubspaceBasis& w, const RVec& alpha) {
  RVec x = zeros(w.ambient());
  for (std::size_t l = 0; l < alpha.size(); ++l) x = x + alpha[l] * w.basis()[l];
  return x;
}

// Some vertex of D(ys) outside W, if any.
std::optional<RVec> dominated_escape(const RMat& ys, const SubspaceBasis& w, const PolySpace& s) {
  VPoly v = dd_convert(dominated_set(ys, s));
  for (const auto& x : v.vertices) {
    if (!w.contains(x)) return x;
  }
  return std::nullopt;
}

}  // namespace

HPoly dominated_set(const RMat& ys, const PolySpace& s) {
  if (ys.empty()) throw InputError("dominated_set: empty list");
  RVec t(s.m(), Rat(0));
  for (const auto& y : ys) {
    RVec iy = s.embed(y);
    for (std::size_t j = 0; j < s.m(); ++j) t[j] = std::max(t[j], rat_abs(iy[j]));
  }
  HPoly upper(s.n, s.F, t);
  RMat rows;
  RVec rhs;
  for (std::size_t j = 0; j < s.m(); ++j) {
    LpResult r = lp_optimize(s.F[j], upper, Sense::minimize);
    if (r.status != LpStatus::optimal) throw std::logic_error("dominated_set: upper set has no minimum");
    rows.push_back(-s.F[j]);
    rhs.push_back(-*r.value);
    rows.push_back(s.F[j]);
    rhs.push_back(-*r.value);
  }
  return HPoly(s.n, rows, rhs);
}

bool dominates(const RVec& y, const RVec& x, const PolySpace& s) {
  RVec ty(s.m()), tx(s.m());
  RVec iy = s.embed(y), ix = s.embed(x);
  for (std::size_t j = 0; j < s.m(); ++j) {
    ty[j] = rat_abs(iy[j]);
    tx[j] = rat_abs(ix[j]);
  }
  return poly_subset(HPoly(s.n, s.F, ty), HPoly(s.n, s.F, tx)).holds;
}

RMat positive_generators(const SubspaceBasis& w, const PolySpace& s) {
  if (w.dim() == 0) return {};
  RMat rows;
  for (auto& r : alpha_functionals(w, s)) {
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  RMat out;
  for (const auto& a : cone_generators(rows, w.dim()).rays) out.push_back(canonical_ray(from_alpha(w, a)));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

PredicateResult is_solid(const SubspaceBasis& w, const PolySpace& s, const Budget& budget) {
  if (restrict_cover_band(support(w, s), s) == w) {
    return PredicateResult(Verdict::yes)
        .with("cover_support", [&] {
          RVec c;
          for (auto j : support(w, s)) c.emplace_back(static_cast<long>(j + 1));
          return c;
        }())
        .because("W is the restriction of the cover ideal on its support; ideals restrict to ideals");
  }
  // W is not such a restriction; look for y in W dominating some x outside W.
  std::vector<RVec> candidates = w.basis();
  const auto& b = w.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = i + 1; k < b.size(); ++k) {
      candidates.push_back(b[i] + b[k]);
      candidates.push_back(b[i] - b[k]);
    }
  }
  Rng rng(0x5eed);
  std::size_t tried = 0;
  for (std::size_t c = 0; tried < budget.solid_samples; ++c, ++tried) {
    RVec y;
    if (c < candidates.size()) {
      y = candidates[c];
    } else {
      if (b.empty() || c >= candidates.size() + 64) break;
      y = zeros(s.n);
      for (const auto& v : b) y = y + Rat(rng.integer(-3, 3)) * v;
    }
    if (is_zero(y)) continue;
    if (auto x = dominated_escape({y}, w, s)) {
      return PredicateResult(Verdict::no)
          .with("y", y)
          .with("x", *x)
          .because("y in W dominates x ({y,-y}^u inside {x,-x}^u) but x is not in W");
    }
  }
  return PredicateResult(Verdict::unknown)
      .with("samples", static_cast<long>(tried))
      .because("not a restricted cover ideal and no refutation found within the sample budget");
}

PredicateResult is_directed(const SubspaceBasis& w, const PolySpace& s) {
  const std::size_t d = w.dim();
  if (d == 0) return PredicateResult(Verdict::yes).because("W = {0}");
  RMat g = alpha_functionals(w, s);
  for (const auto& b : w.basis()) {
    RMat rows;
    RVec rhs;
    for (std::size_t j = 0; j < s.m(); ++j) {
      if (is_zero(g[j])) continue;
      rows.push_back(g[j]);
      rhs.push_back(0);
      rows.push_back(g[j]);
      rhs.push_back(dot(s.F[j], b));
    }
    HPoly region(d, rows, rhs);
    LpResult r = lp_optimize(zeros(d), region, Sense::minimize);
    if (r.status == LpStatus::infeasible) {
      return PredicateResult(Verdict::no)
          .with("element", b)
          .with("farkas", r.dual)
          .because("basis element has no upper bound in W that is also positive");
    }
  }
  return PredicateResult(Verdict::yes).because("every basis element is a difference of positive elements of W");
}

PredicateResult is_solvex(const SubspaceBasis& w, const PolySpace& s, const Budget& budget) {
  PredicateResult solid = is_solid(w, s, budget);
  if (solid.no()) {
    PredicateResult r(Verdict::no);
    r.witnesses = solid.witnesses;
    return r.because("not solid, and every solvex set is solid");
  }
  PredicateResult directed = is_directed(w, s);
  if (solid.yes() && directed.yes()) {
    return PredicateResult(Verdict::yes).because("directed ideal, and every directed ideal is solvex");
  }
  // Signed convex combinations of up to `depth` basis elements.
  const RMat& b = w.basis();
  std::vector<std::size_t> idx;
  std::function<std::optional<PredicateResult>(std::size_t)> rec = [&](std::size_t start)
      -> std::optional<PredicateResult> {
    if (!idx.empty()) {
      RMat ys;
      for (auto i : idx) ys.push_back(b[i]);
      if (auto x = dominated_escape(ys, w, s)) {
        return PredicateResult(Verdict::no)
            .with("ys", ys)
            .with("x", *x)
            .because("x is dominated by the signed convex hull of ys in W but x is not in W");
      }
    }
    if (idx.size() == budget.solvex_depth) return std::nullopt;
    for (std::size_t i = start; i < b.size(); ++i) {
      idx.push_back(i);
      if (auto r = rec(i + 1)) return r;
      idx.pop_back();
    }
    return std::nullopt;
  };
  if (auto r = rec(0)) return *r;
  return PredicateResult(Verdict::unknown)
      .with("depth", static_cast<long>(budget.solvex_depth))
      .because("no refutation among signed convex combinations within the depth budget");
}

RVec SectionDescriptor::point(const RVec& alpha) const { return from_alpha(ideal, alpha); }

SectionDescriptor section(const SubspaceBasis& ideal, const RVec& a, const RVec& z, const PolySpace& s) {
  if (a.size() != s.n || z.size() != s.n) throw DimensionMismatch("section: wrong dimension");
  if (!order_leq(a, z, s)) throw PreconditionViolated("section: lower bound is not below upper bound");
  SectionDescriptor sec;
  sec.ideal = ideal;
  sec.lower = a;
  sec.upper = z;
  const std::size_t d = ideal.dim();
  RMat g = alpha_functionals(ideal, s);
  RVec ia = s.embed(a), iz = s.embed(z);
  bool trivially_empty = false;
  RMat rows;
  RVec rhs;
  for (std::size_t j = 0; j < s.m(); ++j) {
    if (is_zero(g[j])) {
      if (ia[j] > 0 || iz[j] < 0) trivially_empty = true;
      continue;
    }
    rows.push_back(g[j]);
    rhs.push_back(ia[j]);
    rows.push_back(-g[j]);
    rhs.push_back(-iz[j]);
  }
  if (trivially_empty) {
    sec.nonempty = false;
    sec.alpha_region = d == 0 ? HPoly::whole(0) : HPoly(d, {unit(d, 0), -unit(d, 0)}, {Rat(1), Rat(0)});
    return sec;
  }
  sec.alpha_region = HPoly(d, rows, rhs);
  sec.nonempty = lp_feasible_point(sec.alpha_region).has_value();
  return sec;
}

namespace {

SupResult finish_sup(RVec cover, const PolySpace& s) {
  SupResult res;
  res.cover_sup = std::move(cover);
  if (auto x = solve(s.F, res.cover_sup, s.n)) {
    res.kind = SupResult::Kind::exists;
    res.element = *x;
  } else {
    res.kind = SupResult::Kind::not_in_x;
  }
  return res;
}

}  // namespace

SupResult sup_over_set(const SectionDescriptor& sec, const PolySpace& s) {
  if (!sec.nonempty) return SupResult{};
  const std::size_t d = sec.ideal.dim();
  RMat g = alpha_functionals(sec.ideal, s);
  RVec cover(s.m(), Rat(0));
  if (d > 0) {
    for (std::size_t j = 0; j < s.m(); ++j) {
      LpResult r = lp_optimize(g[j], sec.alpha_region, Sense::maximize);
      if (r.status != LpStatus::optimal) throw std::logic_error("sup_over_set: section sup not attained");
      cover[j] = *r.value;
    }
  }
  return finish_sup(std::move(cover), s);
}

SupResult sup_over_set(const RMat& elements, const PolySpace& s) {
  if (elements.empty()) return SupResult{};
  RVec cover = s.embed(elements.front());
  for (const auto& e : elements) {
    RVec ie = s.embed(e);
    for (std::size_t j = 0; j < s.m(); ++j) cover[j] = std::max(cover[j], ie[j]);
  }
  return finish_sup(std::move(cover), s);
}

PredicateResult is_s_closed(const SubspaceBasis& ideal, const PolySpace& s) {
  // z = sup(I cap [0,z]) iff for every j some w in I cap [0,z] has F_j w = F_j z,
  // i.e. z lies in (I cap K) + K_j with K_j the face {F_j = 0} of K. So I is
  // s-closed iff T = intersection over j of ((I cap K) + K_j) lies in I.
  RMat ik = positive_generators(ideal, s);
  std::optional<HPoly> t;
  for (std::size_t j = 0; j < s.m(); ++j) {
    RMat gens = ik;
    for (const auto& r : s.cone_v) {
      if (dot(s.F[j], r) == 0) gens.push_back(r);
    }
    if (gens.empty()) {
      return PredicateResult(Verdict::yes).because("some face sum is {0}, so only z = 0 satisfies z = sup(I cap [0,z])");
    }
    HPoly h = dd_convert(VPoly{s.n, {zeros(s.n)}, gens, {}});
    t = t ? t->intersect(h) : h;
  }
  if (!t) return PredicateResult(Verdict::yes).because("no cover coordinates");
  VPoly tv = dd_convert(*t);
  RMat gens = tv.rays;
  gens.insert(gens.end(), tv.lineality.begin(), tv.lineality.end());
  for (const auto& z : gens) {
    if (!ideal.contains(z)) {
      SupResult sup = sup_over_set(section(ideal, zeros(s.n), z, s), s);
      if (sup.kind != SupResult::Kind::exists || *sup.element != z) {
        throw std::logic_error("is_s_closed: face-sum witness does not reproduce its supremum");
      }
      return PredicateResult(Verdict::no)
          .with("z", z)
          .because("z = sup(I cap [0,z]) (cover supremum equals i(z)) but z is not in I");
    }
  }
  return PredicateResult(Verdict::yes)
      .because("every z with z = sup(I cap [0,z]) lies in the face-sum cone T, and T is inside I");
}

PredicateResult is_o_closed(const SubspaceBasis& w, const PolySpace& s) {
  if (w.ambient() != s.n) throw DimensionMismatch("is_o_closed: wrong ambient dimension");
  return PredicateResult(Verdict::yes)
      .because("finite dimension with a closed generating pointed cone: o-convergence implies norm convergence, and subspaces are closed");
}

LzReport lz_band_condition(const SubspaceBasis& ideal, const std::vector<RMat>& families, const PolySpace& s) {
  LzReport rep;
  rep.s_closed = is_s_closed(ideal, s);
  std::vector<RMat> all = families;
  if (rep.s_closed.no()) {
    // The vertices of I cap [0,z] form a finite family with supremum z.
    const RVec& z = rep.s_closed.get<RVec>("z");
    SectionDescriptor sec = section(ideal, zeros(s.n), z, s);
    RMat pts;
    if (ideal.dim() == 0) {
      pts.push_back(zeros(s.n));
    } else {
      for (const auto& a : dd_convert(sec.alpha_region).vertices) pts.push_back(sec.point(a));
    }
    all.push_back(pts);
  }
  for (const auto& fam : all) {
    for (const auto& e : fam) {
      if (!ideal.contains(e)) throw PreconditionViolated("lz_band_condition: family element outside the ideal");
    }
    LzFamilyOutcome out;
    out.sup = sup_over_set(fam, s);
    out.in_ideal = out.sup.kind == SupResult::Kind::exists && ideal.contains(*out.sup.element);
    if (out.sup.kind == SupResult::Kind::exists && !out.in_ideal) rep.all_in_ideal = false;
    rep.families.push_back(std::move(out));
  }
  if (is_pervasive(s).yes() && is_directed(ideal, s).yes()) {
    rep.consistent = rep.s_closed.yes() == rep.all_in_ideal;
  }
  return rep;
}

PredicateResult directed_section_check(const SubspaceBasis& ideal, const RVec& x, const PolySpace& s) {
  if (!s.in_cone(x)) throw PreconditionViolated("directed_section_check: x is not positive");
  SectionDescriptor sec = section(ideal, zeros(s.n), x, s);
  const std::size_t d = ideal.dim();
  if (d == 0) return PredicateResult(Verdict::yes).because("section is {0}");
  RMat verts = dd_convert(sec.alpha_region).vertices;
  RMat g = alpha_functionals(ideal, s);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t k = i + 1; k < verts.size(); ++k) {
      HPoly region = sec.alpha_region;
      RMat rows;
      RVec rhs;
      for (std::size_t j = 0; j < s.m(); ++j) {
        if (is_zero(g[j])) continue;
        rows.push_back(g[j]);
        rhs.push_back(std::max(dot(g[j], verts[i]), dot(g[j], verts[k])));
      }
      region = region.intersect(HPoly(d, rows, rhs));
      if (!lp_feasible_point(region)) {
        return PredicateResult(Verdict::no)
            .with("a1", sec.point(verts[i]))
            .with("a2", sec.point(verts[k]))
            .because("no element of the section lies above both a1 and a2");
      }
    }
  }
  return PredicateResult(Verdict::yes)
      .with("vertices", static_cast<long>(verts.size()))
      .because("all vertex pairs have a common upper bound in the section; the set of such pairs is convex");
}

bool TheoremSuiteReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TheoremRow& r) { return r.violations.empty(); });
}

TheoremSuiteReport theorem_suite(const PolySpace& s, const std::vector<NamedSubspace>& ideals,
                                 const RMat& samples) {
  TheoremSuiteReport rep;
  rep.pervasive = is_pervasive(s).yes();
  rep.rdp = is_lattice_rdp(s).yes();

  RMat pos = s.cone_v;
  RVec sum = zeros(s.n);
  for (const auto& r : s.cone_v) sum = sum + r;
  pos.push_back(sum);
  for (const auto& x : samples) {
    if (s.in_cone(x)) pos.push_back(x);
  }

  for (const auto& named : ideals) {
    const SubspaceBasis& I = named.basis;
    TheoremRow row;
    row.name = named.name;
    row.solid = is_solid(I, s);
    row.directed = is_directed(I, s);
    SubspaceBasis d = disjoint_complement(I, s);
    SubspaceBasis dd = disjoint_complement(d, s);
    row.dd_directed = is_directed(dd, s);
    row.band = is_band(I, s);
    row.o_closed = is_o_closed(I, s);
    row.s_closed = is_s_closed(I, s);

    const bool ideal = row.solid.yes();
    const bool dir = row.directed.yes();
    const bool dd_dir = row.dd_directed.yes();
    const bool band = row.band.yes();
    const bool oc = row.o_closed.yes();
    const bool sc = row.s_closed.yes();
    const bool P = rep.pervasive, R = rep.rdp;

    using Hyps = std::vector<std::pair<const char*, bool>>;
    // Checks the implication when every hypothesis holds; when exactly one of
    // at least two hypotheses fails and the conclusion fails too, records a
    // near miss.
    auto check = [&](const std::string& name, const Hyps& hyps, const std::function<bool()>& conclusion) {
      std::size_t failed = 0;
      const char* dropped = nullptr;
      for (const auto& [h, holds] : hyps) {
        if (!holds) {
          ++failed;
          dropped = h;
        }
      }
      if (failed > 1) return;
      bool c = conclusion();
      if (failed == 0) {
        row.checked.push_back(name);
        if (!c) row.violations.push_back(name);
      } else if (!c && hyps.size() >= 2) {
        row.near_misses.push_back(name + " [without: " + dropped + "]");
      }
    };
    auto holds = [](bool b) { return [b] { return b; }; };

    check("A subset of A^dd", {}, holds(dd.contains(I)));
    check("A^d = A^ddd", {}, holds(disjoint_complement(dd, s) == d));
    check("band is an ideal", {{"band", band}}, holds(!row.solid.no()));
    check("band is o-closed", {{"band", band}}, holds(oc));

    auto sup_is = [&](const RVec& z) {
      SupResult r = sup_over_set(section(I, zeros(s.n), z, s), s);
      return r.kind == SupResult::Kind::exists && *r.element == z;
    };
    RMat dd_pos = positive_generators(dd, s);
    RVec dd_sum = zeros(s.n);
    for (const auto& r : dd_pos) dd_sum = dd_sum + r;

    const std::pair<const char*, bool> hP{"pervasive", P}, hR{"RDP", R}, hI{"ideal", ideal},
        hD{"directed", dir}, hS{"s-closed", sc}, hDD{"I^dd directed", dd_dir}, hB{"band", band},
        hO{"o-closed", oc};
    check("(I^dd)+ inside I for s-closed directed ideals", {hP, hI, hD, hS}, [&] {
      return std::all_of(dd_pos.begin(), dd_pos.end(), [&](const RVec& z) { return I.contains(z); });
    });
    check("s-closed directed ideal with directed I^dd is a band", {hP, hI, hD, hS, hDD}, holds(band));
    check("z = sup(I cap [0,z]) for z in (I^dd)+", {hP, hI, hD}, [&] {
      return std::all_of(dd_pos.begin(), dd_pos.end(), sup_is) && sup_is(dd_sum);
    });
    check("x = sup(I cap [0,x]) iff x in (I^dd)+", {hP, hI, hD}, [&] {
      RMat xs = pos;
      xs.insert(xs.end(), dd_pos.begin(), dd_pos.end());
      for (const auto& x : xs) {
        if (sup_is(x) != dd.contains(x)) return false;
      }
      return true;
    });
    check("directed band is s-closed (pervasive)", {hP, hB, hD}, holds(sc));
    check("I cap [0,x] is directed (RDP)", {hR, hI, hD}, [&] {
      for (const auto& x : pos) {
        if (!directed_section_check(I, x, s).yes()) return false;
      }
      return true;
    });
    check("o-closed directed ideal with directed I^dd is a band", {hP, hR, hI, hD, hO, hDD}, holds(band));
    check("o-closed directed ideal is s-closed (RDP)", {hR, hI, hD, hO}, holds(sc));
    check("s-closed directed ideal with directed I^dd is o-closed", {hP, hI, hD, hDD, hS}, holds(oc));
    check("directed band is s-closed (RDP)", {hR, hB, hD}, holds(sc));

    auto edge = [&](const std::string& what, bool happened) {
      if (happened) row.counterexample_edges.push_back(what);
    };
    std::string ctx = std::string(P ? "pervasive" : "not pervasive") + ", " + (R ? "RDP" : "no RDP") +
                      ", I^dd " + (dd_dir ? "directed" : "not directed");
    edge("o-closed but not a band (" + ctx + ")", ideal && dir && oc && !band);
    edge("s-closed but not a band (" + ctx + ")", ideal && dir && sc && !band);
    edge("band but not s-closed (" + ctx + ")", band && !row.s_closed.yes() && row.s_closed.no());
    edge("o-closed but not s-closed (" + ctx + ")", ideal && dir && oc && row.s_closed.no());
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace bandlab
