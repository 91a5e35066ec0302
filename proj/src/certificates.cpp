#include <set>

#include "bandlab/funcspace.hpp"
#include "bandlab/generator.hpp"
#include "bandlab/lp.hpp"

namespace bandlab {

// --------------------------------------------------- o-convergence certificates

OConvCheck check_order_convergence(const OConvCertificate& cert, const FuncSpace& s) {
  OConvCheck out;
  auto fail = [&](long n, std::string why) {
    out.valid = false;
    out.failed_n = n;
    out.failure = std::move(why);
    return out;
  };
  if (cert.n0 < 1 || cert.n1 < cert.n0) return fail(0, "empty or invalid prefix");
  if (!s.contains(cert.limit)) return fail(0, "limit is not in X");
  for (long n = cert.n0; n <= cert.n1; ++n) {
    FElem x = cert.member(n);
    FElem y = cert.dominator(n);
    if (!s.contains(x)) return fail(n, "member is not in X");
    if (!s.contains(y)) return fail(n, "dominator is not in X");
    if (!cone_test(y, s)) return fail(n, "dominator is not positive");
    if (n < cert.n1 && !func_leq(cert.dominator(n + 1), y, s)) return fail(n, "dominators are not decreasing");
    if (!func_leq(cert.limit - x, y, s)) return fail(n, "limit - member exceeds the dominator");
    if (!func_leq(x - cert.limit, y, s)) return fail(n, "member - limit exceeds the dominator");
    Rat r = cert.radius_constant / n;
    std::vector<std::pair<Rat, Rat>> nbhd;
    for (const auto& e : cert.exceptional) {
      nbhd.push_back({std::max(Rat(-1), Rat(e - r)), std::min(Rat(1), Rat(e + r))});
    }
    ClosedSet outside = nbhd.empty() ? ClosedSet::whole() : ClosedSet(nbhd).closure_of_complement();
    ZeroSet zs = zero_set(y, s);
    for (const auto& [a, b] : outside.intervals()) {
      bool covered = false;
      for (const auto& p : zs.pieces) {
        bool lo_ok = p.lo < a || (p.lo == a && p.lo_closed);
        bool hi_ok = p.hi > b || (p.hi == b && p.hi_closed);
        covered = covered || (lo_ok && hi_ok);
      }
      if (!covered) return fail(n, "dominator does not vanish outside the C/n-neighbourhood of E");
    }
  }
  out.valid = true;
  return out;
}

OConvCheck verify_not_o_closed_certificate(const OConvCertificate& cert,
                                           const std::function<bool(const FElem&)>& in_w,
                                           const FuncSpace& s) {
  for (long n = cert.n0; n <= cert.n1; ++n) {
    if (!in_w(cert.member(n))) return OConvCheck{false, n, "member is not in W"};
  }
  OConvCheck c = check_order_convergence(cert, s);
  if (!c.valid) return c;
  if (in_w(cert.limit)) return OConvCheck{false, 0, "limit lies in W"};
  return c;
}

FElem namioka_g() {
  return FElem::from_pa(PAFunc({{Rat(-1), Rat(-1)}, {Rat(-1, 2), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(1)}}));
}

namespace {

Rat left_edge(long n) { return Rat(-1) + Rat(1, n + 2); }
Rat right_edge(long n) { return Rat(1) - Rat(1, n + 1); }

void check_n(long n) {
  if (n < 2) throw InputError("namioka sequences are defined for n >= 2");
}

}  // namespace

FElem namioka_g_n(long n) {
  check_n(n);
  FElem g = namioka_g();
  Rat a = left_edge(n), b = right_edge(n);
  std::vector<std::pair<Rat, Rat>> pts{{Rat(-1), Rat(0)}, {a, g.at(a)}};
  for (const auto& [t, v] : g.pa.points()) {
    if (t > a && t < b) pts.emplace_back(t, v);
  }
  pts.emplace_back(b, g.at(b));
  pts.emplace_back(Rat(1), Rat(0));
  return FElem::from_pa(PAFunc(std::move(pts)));
}

namespace {

FElem u_n_with_edges(long n, bool absolute) {
  check_n(n);
  FElem diff = namioka_g() - namioka_g_n(n);
  Rat a = left_edge(n), b = right_edge(n);
  Rat lv = absolute ? rat_abs(diff.at(-1)) : diff.at(-1);
  Rat rv = absolute ? rat_abs(diff.at(1)) : diff.at(1);
  Rat w = Rat(1, n);
  std::vector<std::pair<Rat, Rat>> pts{{Rat(-1), lv}, {a, Rat(0)}, {Rat(-w), Rat(0)}, {Rat(0), Rat(1)},
                                       {w, Rat(0)},   {b, Rat(0)}, {Rat(1), rv}};
  return FElem::from_pa(PAFunc(std::move(pts)));
}

}  // namespace

FElem namioka_u_n(long n) { return u_n_with_edges(n, true); }
FElem namioka_u_n_printed(long n) { return u_n_with_edges(n, false); }

// ------------------------------------------------------------ pervasiveness

namespace {

std::optional<FElem> minorant_tent(const FElem& y, const FuncSpace& s) {
  const bool constrained = s.family == Family::namioka_pa;
  const std::vector<Rat> special{Rat(-1), Rat(0), Rat(1)};
  for (int k = 1; k <= 10; ++k) {
    long steps = 1L << k;
    for (long i = 1; i < steps; ++i) {
      Rat p = Rat(-1) + make_rat(2 * i, steps);
      if (constrained && (p == 0)) continue;
      Rat yp = y.at(p);
      if (yp <= 0) continue;
      Rat r = Rat(1, 4);
      for (const auto& t : special) {
        if (t != p) r = std::min(r, Rat(rat_abs(t - p) / 2));
      }
      for (int h = 0; h < 64; ++h, r /= 2) {
        Domain local{Domain::Kind::interval, std::max(Rat(-1), Rat(p - r)), std::min(Rat(1), Rat(p + r)), false};
        if (!nonnegative(y - (yp / 2) * one_function(), local)) continue;
        FElem x = tent(p, r, yp / 2);
        if (s.contains(x) && nonnegative(y - x, s.domain)) return x;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PredicateResult pervasive_func(const FuncSpace& s, const std::vector<FElem>& samples) {
  switch (s.family) {
    case Family::ex_quad: {
      FElem q = FElem::square();
      auto [b, c] = q.pa.piece_coefficients(0, 0);
      bool extreme = nonnegative(q, s.domain) && q.quad > 0 && b * b - 4 * q.quad * c == 0;
      // For lambda > 0 the element 1 - lambda q has negative leading coefficient.
      bool unit_blocks = !nonnegative(one_function() - Rat(1, 1000000) * q, s.domain);
      if (!extreme || !unit_blocks) return PredicateResult(Verdict::unknown).because("blocker checks failed");
      return PredicateResult(Verdict::no)
          .with("blocker", std::string("min(t^2, 1)"))
          .with("blocker_pair", std::string("t^2 and 1"))
          .because("t^2 spans an extreme ray (nonnegative with zero discriminant), so 0 <= x <= t^2 forces "
                   "x = lambda t^2")
          .because("lambda t^2 <= 1 on R forces lambda <= 0 (leading coefficient), so no 0 < x <= min(t^2, 1)");
    }
    case Family::ex1_atom:
    case Family::band_h: {
      FElem blocker;
      blocker.atoms[Rat(2)] = 1;
      bool forced = blocker.at(Rat(1, 2)) == 0 && blocker.at(-1) == 0 && blocker.at(Rat(-1, 2)) == 0 &&
                    blocker.at_extra() == 1 && s.cover_contains(blocker);
      if (!forced) return PredicateResult(Verdict::unknown).because("blocker checks failed");
      return PredicateResult(Verdict::no)
          .with("blocker", std::string("1_{2}"))
          .because("0 <= x <= 1_{2} forces the generic value c = 0, x(-1/2) = 0 and every atom value "
                   "c + lambda_a = 0, hence x = 0");
    }
    default:
      break;
  }
  PredicateResult r(Verdict::yes);
  r.because("every nonzero y >= 0 in C[-1,1] is positive on an open interval; a small tent of X at a "
            "dyadic point inside it lies below y");
  long certified = 0;
  for (const auto& y : samples) {
    if (!s.cover_contains(y) || !nonnegative(y, s.domain) || zero_sets_cover(zero_set(y, s.domain), zero_set(y, s.domain), s.domain)) {
      throw InputError("pervasive_func: samples must be nonzero positive cover elements");
    }
    auto x = minorant_tent(y, s);
    if (!x) {
      r.verdict = Verdict::unknown;
      r.because("no minorant constructed for sample " + to_string(y));
      continue;
    }
    ++certified;
    r.with("minorant", to_string(*x));
  }
  r.with("samples_certified", certified);
  return r;
}

PredicateResult rdp_refute_example3(const FElem& x1, const FElem& x2, const FElem& z, const FuncSpace& s) {
  if (s.family != Family::example3_paq) throw InputError("rdp_refute_example3: wrong family");
  PredicateResult r(Verdict::unknown);
  if (!s.contains(x1) || !s.contains(x2) || !s.contains(z)) return r.because("triple not in X");
  if (!cone_test(x1, s) || !cone_test(x2, s) || !cone_test(z, s) || !func_leq(z, x1 + x2, s)) {
    return r.because("hypotheses 0 <= x_i, 0 <= z <= x1 + x2 fail");
  }
  auto interval_zero = [&](const FElem& x) -> std::optional<ZeroPiece> {
    for (const auto& p : zero_set(x, s).pieces) {
      if (p.lo < p.hi) return p;
    }
    return std::nullopt;
  };
  auto p1 = interval_zero(x1), p2 = interval_zero(x2);
  if (!p1 || !p2) return r.because("x1 or x2 does not vanish on a nondegenerate interval");
  if (z.quad == 0) return r.because("z has no t^2 component");
  r.verdict = Verdict::no;
  r.with("x1_zero_interval_lo", p1->lo).with("x1_zero_interval_hi", p1->hi);
  r.with("x2_zero_interval_lo", p2->lo).with("x2_zero_interval_hi", p2->hi);
  r.with("z_t2_coefficient", z.quad);
  r.because("0 <= z_i <= x_i forces z_i = 0 on the zero interval of x_i");
  r.because("an element pa + lambda t^2 vanishing on a nondegenerate interval has lambda = 0 (on a subinterval "
            "pa is affine, and lambda t^2 + alpha t + beta = 0 there)");
  r.because("so z1 + z2 has no t^2 component, while z has one: no decomposition exists");
  return r;
}

PredicateResult rdp_search_namioka(const FuncSpace& s, std::size_t trials, unsigned long seed) {
  if (s.family != Family::namioka_pa) throw InputError("rdp_search_namioka: wrong family");
  Rng rng(seed);
  const std::vector<Rat> grid{Rat(-1), Rat(-1, 2), Rat(-1, 4), Rat(0), Rat(1, 4), Rat(1, 2), Rat(1)};
  auto random_positive = [&]() {
    std::vector<std::pair<Rat, Rat>> pts;
    for (const auto& t : grid) pts.emplace_back(t, Rat(rng.integer(0, 4)));
    pts[3].second = (pts[0].second + pts[6].second) / 2;
    return FElem::from_pa(PAFunc(std::move(pts)));
  };
  std::size_t tested = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    FElem x1 = random_positive(), x2 = random_positive(), w = random_positive();
    FElem z = FElem::from_pa(PAFunc::min((x1 + x2).pa, w.pa));
    if (!s.contains(z)) continue;
    ++tested;
    std::set<Rat> ts{Rat(0)};
    for (const auto* f : {&x1, &x2, &z}) {
      for (const auto& t : f->pa.breakpoints()) ts.insert(t);
    }
    std::vector<Rat> pts(ts.begin(), ts.end());
    const std::size_t n = pts.size();
    RMat a;
    RVec b;
    for (std::size_t i = 0; i < n; ++i) {
      RVec e = unit(n, i);
      a.push_back(e), b.push_back(0);
      a.push_back(-e), b.push_back(-std::min(x1.at(pts[i]), z.at(pts[i])));
      a.push_back(e), b.push_back(z.at(pts[i]) - x2.at(pts[i]));
    }
    RVec eq = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (pts[i] == 0) eq[i] += 1;
      if (pts[i] == -1 || pts[i] == 1) eq[i] -= Rat(1, 2);
    }
    HPoly region = HPoly(n, a, b).with_equality(eq, 0);
    if (!lp_feasible_point(region)) {
      return PredicateResult(Verdict::no)
          .with("x1", to_string(x1))
          .with("x2", to_string(x2))
          .with("z", to_string(z))
          .because("the decomposition LP on the common breakpoints is infeasible; interpolation makes this "
                   "grid exact");
    }
  }
  return PredicateResult(Verdict::unknown)
      .with("triples_tested", long(tested))
      .because("every sampled triple decomposes; no decision procedure for this family");
}

}  // namespace bandlab
