#include "bandlab/funcspace.hpp"

#include <algorithm>
#include <set>

namespace bandlab {

std::string to_string(Family f) {
  switch (f) {
    case Family::namioka_pa: return "namioka_pa";
    case Family::pa_lattice: return "pa_lattice";
    case Family::example3_paq: return "example3_paq";
    case Family::ex_quad: return "ex_quad";
    case Family::ex1_atom: return "ex1_atom";
    case Family::band_h: return "band_h";
  }
  return "?";
}

FuncSpace make_space(Family f) {
  FuncSpace s;
  s.family = f;
  switch (f) {
    case Family::ex_quad:
      s.domain.kind = Domain::Kind::real_line;
      break;
    case Family::ex1_atom:
      s.domain.lo = 0;
      s.domain.extra_point = true;
      break;
    case Family::band_h:
      s.domain.extra_point = true;
      break;
    default:
      break;
  }
  return s;
}

FElem h_function() {
  return FElem::from_pa(PAFunc({{Rat(-1), Rat(0)}, {Rat(-1, 2), Rat(1)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)}}));
}

FElem one_function() { return FElem::from_pa(PAFunc(Rat(1))); }

FElem indicator_A() { return FElem::constant(1); }

FElem atom_pair(const Rat& a) {
  FElem f;
  f.atoms[a] = 1;
  f.atoms[Rat(2)] = 1;
  return f;
}

FElem tent(const Rat& p, const Rat& r, const Rat& height) {
  if (r <= 0) throw InputError("tent: radius must be positive");
  auto val = [&](const Rat& t) {
    Rat d = rat_abs(t - p) / r;
    return d >= 1 ? Rat(0) : Rat(height * (1 - d));
  };
  std::set<Rat> ts{Rat(-1), Rat(1)};
  for (const Rat& t : {Rat(p - r), p, Rat(p + r)}) {
    if (t > -1 && t < 1) ts.insert(t);
  }
  std::vector<std::pair<Rat, Rat>> pts;
  for (const auto& t : ts) pts.emplace_back(t, val(t));
  return FElem::from_pa(PAFunc(std::move(pts)));
}

namespace {

bool is_constant(const PAFunc& p) { return p.points().size() == 2 && p.points()[0].second == p.points()[1].second; }

bool atoms_paired(const FElem& x) {
  Rat sum = 0;
  Rat two = 0;
  for (const auto& [t, v] : x.atoms) {
    if (t == 2) {
      two = v;
    } else if (t < 0 || t > 1) {
      return false;
    } else {
      sum += v;
    }
  }
  return two == sum;
}

bool plain(const FElem& x) { return x.atoms.empty() && x.extra == 0; }

}  // namespace

bool FuncSpace::contains(const FElem& x) const {
  switch (family) {
    case Family::namioka_pa:
      return plain(x) && x.quad == 0 && x.pa(0) * 2 == x.pa(-1) + x.pa(1);
    case Family::pa_lattice:
      return plain(x) && x.quad == 0;
    case Family::example3_paq:
      return plain(x);
    case Family::ex_quad:
      return plain(x) && x.pa.points().size() == 2;
    case Family::ex1_atom:
      return x.quad == 0 && is_constant(x.pa) && x.extra == x.pa(0) && atoms_paired(x);
    case Family::band_h: {
      if (x.quad != 0 || !atoms_paired(x)) return false;
      Rat c = x.pa(-1);
      Rat mu = x.pa(Rat(-1, 2)) - c;
      return x.extra == c && x.pa == (FElem::constant(c) + mu * h_function()).pa;
    }
  }
  return false;
}

bool FuncSpace::cover_contains(const FElem& x) const {
  switch (family) {
    case Family::ex1_atom:
      return x.quad == 0 && is_constant(x.pa) && x.extra == x.pa(0);
    case Family::band_h: {
      if (x.quad != 0) return false;
      Rat c = x.pa(-1);
      Rat mu = x.pa(Rat(-1, 2)) - c;
      for (const auto& [t, v] : x.atoms) {
        if (t != 2 && (t < 0 || t > 1)) return false;
      }
      return x.extra == c && x.pa == (FElem::constant(c) + mu * h_function()).pa;
    }
    default:
      return plain(x);
  }
}

bool cone_test(const FElem& x, const FuncSpace& s) {
  if (!s.contains(x)) throw InputError("cone_test: element is not in the space " + to_string(s.family));
  return nonnegative(x, s.domain);
}

bool func_leq(const FElem& x, const FElem& y, const FuncSpace& s) { return cone_test(y - x, s); }

ZeroSet zero_set(const FElem& x, const FuncSpace& s) { return zero_set(x, s.domain); }

bool is_disjoint_cover(const FElem& x, const FElem& y, const FuncSpace& s) {
  if (!s.cover_contains(x) || !s.cover_contains(y)) {
    throw InputError("is_disjoint_cover: element outside the cover of " + to_string(s.family));
  }
  if (s.family == Family::band_h) {
    // Cover Y: coordinates f(-1), f(-1/2), and pointwise values on [0,1] u {2}.
    if (x.at(-1) * y.at(-1) != 0) return false;
    if (x.at(Rat(-1, 2)) * y.at(Rat(-1, 2)) != 0) return false;
    Domain right{Domain::Kind::interval, 0, 1, true};
    return zero_sets_cover(zero_set(x, right), zero_set(y, right), right);
  }
  return zero_sets_cover(zero_set(x, s.domain), zero_set(y, s.domain), s.domain);
}

// ------------------------------------------------------------ zero-set ideals

namespace {

void require_zideal_family(const FuncSpace& s) {
  if (s.family != Family::namioka_pa && s.family != Family::pa_lattice &&
      s.family != Family::example3_paq) {
    throw InputError("zero-set ideals are defined for the C[-1,1]-covered families only");
  }
}

ClosedSet with_point(const ClosedSet& z, const Rat& t) { return z.unite(ClosedSet::point(t)); }

bool covers_interval(const ZeroSet& zs, const Rat& a, const Rat& b) {
  for (const auto& p : zs.pieces) {
    bool lo_ok = p.lo < a || (p.lo == a && p.lo_closed);
    bool hi_ok = p.hi > b || (p.hi == b && p.hi_closed);
    if (lo_ok && hi_ok) return true;
  }
  return false;
}

Rat distance_to(const Rat& p, const ClosedSet& w) {
  Rat best = 4;
  for (const auto& [a, b] : w.intervals()) {
    Rat d = p < a ? Rat(a - p) : (p > b ? Rat(p - b) : Rat(0));
    best = std::min(best, d);
  }
  return best;
}

}  // namespace

ClosedSet linear_closure(const ClosedSet& z, const FuncSpace& s) {
  require_zideal_family(s);
  if (s.family != Family::namioka_pa) return z;
  ClosedSet cur = z;
  for (int round = 0; round < 3; ++round) {
    bool m1 = cur.contains(Rat(-1)), p1 = cur.contains(Rat(1)), z0 = cur.contains(Rat(0));
    if (m1 && p1) cur = with_point(cur, 0);
    if (z0 && m1) cur = with_point(cur, 1);
    if (z0 && p1) cur = with_point(cur, -1);
  }
  return cur;
}

ClosedSet positive_closure(const ClosedSet& z, const FuncSpace& s) {
  ClosedSet cur = linear_closure(z, s);
  if (s.family == Family::namioka_pa && cur.contains(Rat(0))) {
    // f >= 0 and f(-1) + f(1) = 2 f(0) = 0 force f(-1) = f(1) = 0.
    cur = with_point(with_point(cur, -1), 1);
  }
  return cur;
}

bool member(const FElem& x, const ZIdeal& i, const FuncSpace& s) {
  require_zideal_family(s);
  if (!s.contains(x)) return false;
  ZeroSet zs = zero_set(x, s.domain);
  for (const auto& [a, b] : i.zeros.intervals()) {
    if (!covers_interval(zs, a, b)) return false;
  }
  return true;
}

ZIdeal disjoint_complement(const ZIdeal& i, const FuncSpace& s) {
  // The support of I is the closure of the complement of its common zero set
  // (bumps of I exist at every point off that set); I^d vanishes there.
  return ZIdeal{linear_closure(linear_closure(i.zeros, s).closure_of_complement(), s)};
}

ZIdeal band_generated(const ZIdeal& i, const FuncSpace& s) {
  return disjoint_complement(disjoint_complement(i, s), s);
}

bool same_ideal(const ZIdeal& a, const ZIdeal& b, const FuncSpace& s) {
  return linear_closure(a.zeros, s) == linear_closure(b.zeros, s);
}

std::optional<FElem> element_nonzero_at(const Rat& p, const ClosedSet& w, const FuncSpace& s,
                                        bool positive) {
  require_zideal_family(s);
  if (w.contains(p) || p < -1 || p > 1) return std::nullopt;
  const std::vector<Rat> special{Rat(-1), Rat(0), Rat(1)};
  auto radius = [&](const Rat& q) {
    Rat r = std::min(distance_to(q, w), Rat(1)) / 2;
    if (s.family == Family::namioka_pa) {
      for (const auto& t : special) {
        if (t != q) r = std::min(r, Rat(rat_abs(t - q) / 2));
      }
    }
    return r;
  };
  FElem x = tent(p, radius(p), 1);
  if (s.family == Family::namioka_pa) {
    Rat defect = x.at(0) - (x.at(-1) + x.at(1)) / 2;
    if (defect != 0) {
      bool fixed = false;
      for (const auto& q : special) {
        if (q == p || w.contains(q)) continue;
        Rat eta = q == 0 ? Rat(-defect) : Rat(2 * defect);
        if (positive && eta < 0) continue;
        x = x + tent(q, radius(q), eta);
        fixed = true;
        break;
      }
      if (!fixed) return std::nullopt;
    }
  }
  if (!member(x, ZIdeal{w}, s)) return std::nullopt;
  if (positive && !cone_test(x, s)) return std::nullopt;
  return x;
}

PredicateResult is_band(const ZIdeal& i, const FuncSpace& s) {
  ClosedSet zi = linear_closure(i.zeros, s);
  ClosedSet zb = linear_closure(band_generated(i, s).zeros, s);
  if (zi == zb) {
    return PredicateResult(Verdict::yes).because("I = I^dd: common zero sets agree (" + zi.describe() + ")");
  }
  auto p = zi.point_not_in(zb);
  if (!p) throw std::logic_error("is_band: zero sets differ without a separating point");
  auto x = element_nonzero_at(*p, zb, s, false);
  PredicateResult r(Verdict::no);
  r.with("point", *p).because("I^dd vanishes only on " + zb.describe() + ", I vanishes on " + zi.describe());
  if (x) r.with("element", to_string(*x)).because("element of I^dd that is nonzero at the point, hence outside I");
  return r;
}

PredicateResult is_directed(const ZIdeal& i, const FuncSpace& s) {
  ClosedSet zc = linear_closure(i.zeros, s);
  ClosedSet zp = positive_closure(i.zeros, s);
  if (zc == zp) {
    return PredicateResult(Verdict::yes)
        .because("positive elements of I have the same common zero set as I; every x in I lies below "
                 "C dist(., Z) corrected by a bump, which is in I+");
  }
  auto p = zp.point_not_in(zc);
  auto x = element_nonzero_at(*p, zc, s, false);
  if (!x) return PredicateResult(Verdict::unknown).because("no separating element constructed");
  Rat bound = (rat_abs(x->at(-1)) + rat_abs(x->at(1))) / 2;
  return PredicateResult(Verdict::no)
      .with("x", to_string(*x))
      .with("point", *p)
      .with("forced_value_at_0", bound)
      .because("any u in X with u >= x and u >= -x has u(0) = (u(-1)+u(1))/2 >= forced_value_at_0 > 0, "
               "but every element of I vanishes at 0; so x and -x have no common upper bound in I");
}

PredicateResult is_s_closed(const ZIdeal& i, const FuncSpace& s) {
  ClosedSet zp = positive_closure(i.zeros, s);
  ZIdeal directed_part{zp};
  ZIdeal dd = band_generated(directed_part, s);
  ClosedSet zb = positive_closure(dd.zeros, s);
  PredicateResult r;
  r.because("the space is pervasive; I and its directed part I0 = I+ - I+ have the same sections [0,z]");
  r.because("z >= 0 is the supremum of I0 n [0,z] iff z lies in (I0^dd)+");
  if (zb.contains(zp)) {
    r.verdict = Verdict::yes;
    r.because("(I0^dd)+ is contained in I+: zero set " + zb.describe() + " contains " + zp.describe());
    return r;
  }
  auto p = zp.point_not_in(zb);
  auto z = element_nonzero_at(*p, zb, s, true);
  r.verdict = Verdict::no;
  r.with("point", *p);
  if (z) r.with("z", to_string(*z)).because("z in (I0^dd)+ is nonzero at the point, so z is not in I");
  return r;
}

}  // namespace bandlab
